#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "enumkit/core/assignment.hpp"
#include "enumkit/core/formula.hpp"
#include "enumkit/oracles/oracle_stats.hpp"
#include "enumkit/oracles/sat_oracle.hpp"

namespace enumkit {

struct Sigma2Options {
  std::size_t max_iterations = 10000;
  // Universal checks enumerate all assignments up to this many forall vars.
  std::size_t exhaustive_forall_limit = 12;
  SatOptions sat;
};

/// Decides  exists X forall Y . matrix  under fixed assumption literals by a
/// counterexample-guided loop. A candidate x comes from a SAT call over the
/// blocking clauses collected so far; a counterexample y to it yields the
/// clause forbidding x restricted to the X-variables of the falsified
/// obligation (the falsified clause for a CNF matrix; one false literal per
/// term for a DNF matrix).
///
/// Side clauses restrict X further and persist across decide() calls.
class Sigma2Oracle {
 public:
  Sigma2Oracle(std::vector<int> exists_vars, std::vector<int> forall_vars, Matrix matrix, Sigma2Options options = {});

  void add_side_clause(std::span<const Literal> clause);
  void add_side_clause(std::initializer_list<Literal> clause) {
    add_side_clause(std::span<const Literal>(clause.begin(), clause.size()));
  }

  /// Throws InvalidInstance if some matrix variable is neither in X, Y nor
  /// fixed by an assumption; ResourceLimit when the iteration cap is hit.
  bool decide(std::span<const Literal> assumptions = {});
  bool decide(std::initializer_list<Literal> assumptions) {
    return decide(std::span<const Literal>(assumptions.begin(), assumptions.size()));
  }

  /// Full-length assignment whose X part witnessed the last true answer.
  const std::optional<Assignment>& witness() const noexcept { return witness_; }

  /// One record per decide(): matrix + side clauses + assumptions.
  const OracleStats& stats() const noexcept { return stats_; }
  /// SAT calls made internally (candidate and universal checks).
  std::uint64_t np_calls() const noexcept { return np_calls_; }
  std::uint64_t iterations() const noexcept { return iterations_; }
  std::size_t input_size() const noexcept;
  int num_vars() const noexcept { return num_vars_; }

 private:
  std::optional<Assignment> find_counterexample(const std::vector<std::int8_t>& fixed);

  std::vector<int> exists_;
  std::vector<int> forall_;
  Matrix matrix_;
  Sigma2Options options_;
  int num_vars_ = 0;
  std::vector<std::uint8_t> is_exists_;
  std::vector<std::uint8_t> is_forall_;
  std::vector<Clause> side_;
  std::size_t side_size_ = 0;
  std::optional<Assignment> witness_;
  OracleStats stats_;
  std::uint64_t np_calls_ = 0;
  std::uint64_t iterations_ = 0;
};

bool sigma2_decide(const std::vector<int>& exists_vars, const std::vector<int>& forall_vars, const Matrix& matrix,
                   std::span<const Literal> assumptions = {}, OracleStats* stats = nullptr,
                   Sigma2Options options = {});

}  // namespace enumkit
