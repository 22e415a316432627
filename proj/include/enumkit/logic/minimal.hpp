#pragma once

#include <optional>
#include <vector>

#include "enumkit/core/formula.hpp"
#include "enumkit/engine/flasher.hpp"
#include "enumkit/engine/stream.hpp"
#include "enumkit/oracles/sat_oracle.hpp"

namespace enumkit {

/// Subset-minimal models in discovery order. Each round takes any model and
/// shrinks it: for i ascending with bit i set, ask for a model inside the
/// current one with bit i cleared, and move to it when one exists. After
/// emitting m the clause OR{ -x_i : m_i = 1 } is appended, which rules out m
/// and every superset of m.
class CircumscriptionStream final : public SolutionStream<Assignment> {
 public:
  explicit CircumscriptionStream(const CnfFormula& f, SatOptions options = {});

  std::optional<Assignment> next() override;
  StreamCounters counters() const override;

  const std::vector<Clause>& blocking_clauses() const noexcept { return blocked_; }

 private:
  int n_;
  SatOracle oracle_;
  std::vector<Clause> blocked_;
  bool done_ = false;
  std::uint64_t steps_ = 0;
};

StreamPtr<Assignment> circumscription_enum(const CnfFormula& f, SatOptions options = {});

/// Test helper: the same set sorted lexicographically.
std::vector<Assignment> circumscription_sorted(const CnfFormula& f, SatOptions options = {});

/// Cardinality-minimal models in lex order. The minimum weight k* is found
/// by scanning k = 0, 1, ... with f and at-most-k; the models are then
/// enumerated by a flasher over f and exactly-k*.
class CardMinStream final : public SolutionStream<Assignment> {
 public:
  explicit CardMinStream(CnfFormula f, SatOptions options = {});

  std::optional<Assignment> next() override;
  StreamCounters counters() const override;

  /// Known after the first next(); nullopt for an unsatisfiable formula.
  std::optional<int> min_weight() const noexcept { return k_star_; }
  std::uint64_t scan_calls() const noexcept { return scan_calls_; }

 private:
  void start();

  CnfFormula f_;
  SatOptions options_;
  bool started_ = false;
  std::optional<int> k_star_;
  std::uint64_t scan_calls_ = 0;
  std::size_t scan_max_input_ = 0;
  std::unique_ptr<Flasher> inner_;
};

StreamPtr<Assignment> cardmin_enum(const CnfFormula& f, SatOptions options = {});

}  // namespace enumkit
