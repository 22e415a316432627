#include "enumkit/engine/extension.hpp"

#include <numeric>
#include <stdexcept>

namespace enumkit {
namespace {

std::vector<Literal> prefix_literals(const PartialAssignment& prefix, const std::vector<int>& vars) {
  if (prefix.num_vars() != vars.size()) throw std::invalid_argument("prefix length does not match the extension oracle");
  std::vector<Literal> lits;
  lits.reserve(prefix.prefix_len());
  for (std::size_t i = 0; i < prefix.prefix_len(); ++i) lits.push_back({vars[i], prefix[i]});
  return lits;
}

}  // namespace

SatExtension::SatExtension(const CnfFormula& f, SatOptions options) : oracle_(f, options) {
  decision_vars_.resize(static_cast<std::size_t>(f.num_vars));
  std::iota(decision_vars_.begin(), decision_vars_.end(), 1);
}

SatExtension::SatExtension(const CnfFormula& f, std::vector<int> decision_vars, SatOptions options)
    : oracle_(f, options), decision_vars_(std::move(decision_vars)) {
  for (int v : decision_vars_) oracle_.ensure_vars(v);
}

bool SatExtension::extends(const PartialAssignment& prefix) {
  auto lits = prefix_literals(prefix, decision_vars_);
  return oracle_.solve(lits).sat();
}

bool Sigma2Extension::extends(const PartialAssignment& prefix) {
  auto lits = prefix_literals(prefix, decision_vars_);
  return oracle_->decide(lits);
}

}  // namespace enumkit
