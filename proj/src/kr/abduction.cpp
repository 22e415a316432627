#include "enumkit/kr/abduction.hpp"

#include <string>

#include "enumkit/core/errors.hpp"
#include "enumkit/engine/flasher.hpp"

namespace enumkit {

void validate_abduction(const AbductionInstance& inst, SatOptions options) {
  for (const auto& h : inst.hypotheses)
    if (h.var == inst.q) throw InvalidInstance("q occurs among the hypotheses");
  SatOracle g(inst.gamma, options);
  if (!g.solve().sat()) throw InvalidInstance("knowledge base is unsatisfiable");
}

bool is_explanation(const AbductionInstance& inst, const Assignment& selection, SatOptions options) {
  std::vector<Literal> e;
  for (std::size_t j = 0; j < selection.size(); ++j)
    if (selection[j]) e.push_back(inst.hypotheses[j]);
  SatOracle g(inst.gamma, options);
  g.ensure_vars(inst.num_vars());
  if (!g.solve(e).sat()) return false;
  e.push_back(Literal::neg(inst.q));
  return !g.solve(e).sat();
}

AbductionOracle::AbductionOracle(AbductionInstance inst, AbductionOptions options)
    : inst_(std::move(inst)),
      options_(options),
      base_(inst_.num_vars()),
      candidates_(inst_.gamma, options.sat),
      verifier_(inst_.gamma, options.sat),
      consistency_(inst_.gamma, options.sat) {
  candidates_.ensure_vars(base_ + static_cast<int>(inst_.hypotheses.size()));
  verifier_.ensure_vars(base_);
  consistency_.ensure_vars(base_);
  for (std::size_t j = 0; j < inst_.hypotheses.size(); ++j) candidates_.add_clause({~selector(j), inst_.hypotheses[j]});
  verifier_.add_clause({Literal::neg(inst_.q)});
}

bool AbductionOracle::extends(const PartialAssignment& prefix) {
  if (prefix.num_vars() != inst_.hypotheses.size()) throw std::invalid_argument("prefix length differs from |H|");
  stats_.record(candidates_.formula_size() + prefix.prefix_len());
  return options_.mode == AbductionMode::cegar ? extends_cegar(prefix) : extends_exhaustive(prefix);
}

bool AbductionOracle::extends_cegar(const PartialAssignment& prefix) {
  std::vector<Literal> decided;
  for (std::size_t j = 0; j < prefix.prefix_len(); ++j) decided.push_back(prefix[j] ? selector(j) : ~selector(j));
  for (std::size_t round = 0; round < options_.max_iterations; ++round) {
    ++np_calls_;
    auto cand = candidates_.solve(decided, true);
    if (!cand.sat()) return false;
    std::vector<Literal> e;
    for (std::size_t j = 0; j < inst_.hypotheses.size(); ++j)
      if (cand.model->value_of(selector(j).var)) e.push_back(inst_.hypotheses[j]);
    ++np_calls_;
    auto counter = verifier_.solve(e, true);
    if (!counter.sat()) return true;
    Clause hit;
    for (std::size_t j = 0; j < inst_.hypotheses.size(); ++j)
      if (!inst_.hypotheses[j].satisfied_by(*counter.model)) hit.push_back(selector(j));
    candidates_.add_clause(hit);
    ++countermodels_;
  }
  throw ResourceLimit("abduction extension loop exceeded " + std::to_string(options_.max_iterations) + " iterations");
}

bool AbductionOracle::extends_exhaustive(const PartialAssignment& prefix) {
  const std::size_t h = inst_.hypotheses.size();
  const std::size_t open = h - prefix.prefix_len();
  if (open > options_.exhaustive_limit)
    throw ResourceLimit("exhaustive abduction check is limited to " + std::to_string(options_.exhaustive_limit) +
                        " undecided hypotheses");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << open); ++mask) {
    std::vector<Literal> e;
    for (std::size_t j = 0; j < h; ++j) {
      const bool in = j < prefix.prefix_len() ? prefix[j] : ((mask >> (h - 1 - j)) & 1U);
      if (in) e.push_back(inst_.hypotheses[j]);
    }
    ++np_calls_;
    if (!consistency_.solve(e).sat()) continue;
    ++np_calls_;
    if (!verifier_.solve(e).sat()) return true;
  }
  return false;
}

bool abduction_extsol(const AbductionInstance& inst, const PartialAssignment& decided, AbductionOptions options) {
  AbductionOracle oracle(inst, options);
  return oracle.extends(decided);
}

StreamPtr<Assignment> abduction_enum(const AbductionInstance& inst, AbductionOptions options) {
  validate_abduction(inst, options.sat);
  return flasher(std::make_shared<AbductionOracle>(inst, options));
}

}  // namespace enumkit
