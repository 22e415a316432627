#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "enumkit/core/assignment.hpp"
#include "enumkit/core/formula.hpp"
#include "enumkit/oracles/oracle_stats.hpp"

namespace enumkit {

enum class SatStatus { sat, unsat };

struct SatResult {
  SatStatus status = SatStatus::unsat;
  std::optional<Assignment> model;  // only when requested and SAT

  bool sat() const noexcept { return status == SatStatus::sat; }
};

struct SatOptions {
  // Conflicts allowed per call; exceeding it throws ResourceLimit.
  std::optional<std::uint64_t> conflict_budget;
};

/// DPLL with two-watched-literal unit propagation and chronological
/// backtracking. Decisions pick the lowest unassigned variable and try
/// false first, so the search is deterministic.
///
/// The clause database only grows: add_clause() appends, nothing is ever
/// removed. Each solve() starts from an empty trail.
class SatOracle {
 public:
  explicit SatOracle(int num_vars = 0, SatOptions options = {});
  explicit SatOracle(const CnfFormula& f, SatOptions options = {});

  void add_clause(std::span<const Literal> clause);
  void add_clause(std::initializer_list<Literal> clause) {
    add_clause(std::span<const Literal>(clause.begin(), clause.size()));
  }
  void add_formula(const CnfFormula& f);
  void ensure_vars(int n);

  SatResult solve(std::span<const Literal> assumptions = {}, bool want_model = false);
  SatResult solve(std::initializer_list<Literal> assumptions, bool want_model = false) {
    return solve(std::span<const Literal>(assumptions.begin(), assumptions.size()), want_model);
  }

  int num_vars() const noexcept { return num_vars_; }
  /// Literal occurrences plus one terminator per clause, as in CnfFormula::size().
  std::size_t formula_size() const noexcept { return formula_size_; }
  std::size_t num_clauses() const noexcept { return num_clauses_; }
  const OracleStats& stats() const noexcept { return stats_; }
  OracleStats& stats() noexcept { return stats_; }
  std::uint64_t total_conflicts() const noexcept { return total_conflicts_; }

 private:
  using Lit = std::uint32_t;  // 2 * var + (negative ? 1 : 0)
  static constexpr std::int8_t kUndef = -1;

  static Lit encode(const Literal& l) { return static_cast<Lit>(2 * l.var + (l.positive ? 0 : 1)); }
  static Lit negate(Lit l) { return l ^ 1U; }
  static int var_of(Lit l) { return static_cast<int>(l >> 1); }

  std::int8_t value(Lit l) const;
  bool enqueue(Lit l);
  // Returns false on conflict.
  bool propagate();
  void undo_to(std::size_t trail_size);

  int num_vars_ = 0;
  SatOptions options_;
  OracleStats stats_;
  std::size_t formula_size_ = 0;
  std::size_t num_clauses_ = 0;
  std::uint64_t total_conflicts_ = 0;
  bool has_empty_clause_ = false;

  std::vector<std::vector<Lit>> clauses_;  // width >= 2
  std::vector<Lit> units_;
  std::vector<std::vector<std::uint32_t>> watches_;  // indexed by Lit
  std::vector<std::int8_t> assigns_;                 // indexed by var
  std::vector<Lit> trail_;
  std::size_t propagate_head_ = 0;
};

/// One-shot convenience wrapper; `stats` (if given) is updated.
SatResult sat_decide(const CnfFormula& f, std::span<const Literal> assumptions, bool want_model,
                     OracleStats* stats = nullptr, SatOptions options = {});

/// Lex-least model built from yes/no answers only: one initial call, then
/// one call per variable asking whether the 0-branch survives.
std::optional<Assignment> model_via_decisions(SatOracle& oracle);
std::optional<Assignment> model_via_decisions(const CnfFormula& f, OracleStats* stats = nullptr);

}  // namespace enumkit
