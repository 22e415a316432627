#pragma once

#include <cstdint>
#include <vector>

#include "enumkit/core/assignment.hpp"
#include "enumkit/core/formula.hpp"
#include "enumkit/core/gamma.hpp"
#include "enumkit/oracles/oracle_stats.hpp"
#include "enumkit/schaefer/classify.hpp"

namespace enumkit {

/// Polynomial-time extension check for a Gamma-formula whose language lies
/// in one Schaefer class. The formula is compiled once at construction:
/// horn / dualhorn use unit propagation, bijunctive uses strongly connected
/// components of the implication graph, affine uses Gaussian elimination.
class SchaeferDecider {
 public:
  /// Throws InvalidInstance if some relation of the language lacks the class.
  SchaeferDecider(const GammaFormula& f, SchaeferKind kind);

  /// True iff the prefix (variables 1..prefix_len) extends to a model.
  bool decide(const PartialAssignment& partial);

  SchaeferKind kind() const noexcept { return kind_; }
  int num_vars() const noexcept { return num_vars_; }
  std::size_t compiled_size() const noexcept { return compiled_size_; }
  const OracleStats& stats() const noexcept { return stats_; }

 private:
  bool decide_unit_propagation(const PartialAssignment& partial) const;
  bool decide_two_sat(const PartialAssignment& partial) const;
  bool decide_linear(const PartialAssignment& partial) const;

  SchaeferKind kind_;
  int num_vars_ = 0;
  std::size_t compiled_size_ = 0;
  bool trivially_false_ = false;
  std::vector<Clause> clauses_;
  std::vector<LinearEquation> equations_;  // positions are formula variables here
  OracleStats stats_;
};

bool schaefer_decide(const GammaFormula& f, const PartialAssignment& partial, SchaeferKind kind);

}  // namespace enumkit
