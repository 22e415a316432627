#include "enumkit/core/instances.hpp"

#include <algorithm>

namespace enumkit {

int AbductionInstance::num_vars() const {
  int n = std::max(gamma.num_vars, q);
  for (const auto& h : hypotheses) n = std::max(n, h.var);
  return n;
}

int DiagnosisInstance::num_vars() const {
  int n = mu.num_vars;
  for (const auto& c : components) n = std::max(n, c.num_vars);
  return n;
}

}  // namespace enumkit
