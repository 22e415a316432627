#pragma once

#include <vector>

#include "enumkit/core/formula.hpp"

namespace enumkit {

/// Knowledge gamma, hypothesis literals, manifestation variable q.
struct AbductionInstance {
  CnfFormula gamma;
  std::vector<Literal> hypotheses;
  int q = 1;

  int num_vars() const;
};

/// Components phi_1..phi_n and an observation mu, all in CNF over a shared
/// variable set.
struct DiagnosisInstance {
  std::vector<CnfFormula> components;
  CnfFormula mu;

  int num_vars() const;
};

}  // namespace enumkit
