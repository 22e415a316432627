#pragma once

#include <memory>
#include <optional>

#include "enumkit/core/formula.hpp"
#include "enumkit/core/instances.hpp"
#include "enumkit/engine/ereduction.hpp"
#include "enumkit/engine/flasher.hpp"
#include "enumkit/oracles/sat_oracle.hpp"

namespace enumkit {

/// Throws InvalidInstance unless the components are jointly satisfiable,
/// inconsistent together with mu, and mu alone is satisfiable.
void validate_diagnosis(const DiagnosisInstance& inst, SatOptions options = {});

/// mu plus (-s_i or C) for every clause C of component i, with selector
/// s_i = num_vars + i.
CnfFormula diagnosis_encoding(const DiagnosisInstance& inst);

/// Retained-component vectors of maximum cardinality c* whose conjunction
/// with mu is satisfiable, in lex order. c* is found by scanning
/// c = n, n-1, ... with an exactly-c constraint on the selectors.
class DiagnosisStream final : public SolutionStream<Assignment> {
 public:
  explicit DiagnosisStream(DiagnosisInstance inst, SatOptions options = {});

  std::optional<Assignment> next() override;
  StreamCounters counters() const override;

  /// Known after the first next().
  std::optional<int> max_retained() const noexcept { return c_star_; }

 private:
  void start();

  DiagnosisInstance inst_;
  SatOptions options_;
  bool started_ = false;
  std::optional<int> c_star_;
  std::uint64_t scan_calls_ = 0;
  std::size_t scan_max_input_ = 0;
  std::unique_ptr<Flasher> inner_;
};

/// Validates the instance, then streams.
StreamPtr<Assignment> diagnosis_enum(const DiagnosisInstance& inst, SatOptions options = {});

/// CardMinSAT to diagnosis: component i is (f or x0) and (-x_i or x0) with a
/// fresh x0 = n + 1, mu = -x0. tau complements the retained vector and keeps
/// it only if it is a model of f (an unsatisfiable f would otherwise produce
/// the all-ones vector). sigma throws InvalidInstance for a 0-valid f.
using MbdReduction = EReduction<CnfFormula, Assignment, DiagnosisInstance, Assignment>;
MbdReduction cardmin_to_mbd();

}  // namespace enumkit
