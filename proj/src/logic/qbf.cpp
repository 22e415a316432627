#include "enumkit/logic/qbf.hpp"

#include <functional>

#include "enumkit/core/errors.hpp"
#include "enumkit/engine/brute_force.hpp"
#include "enumkit/engine/extension.hpp"
#include "enumkit/engine/flasher.hpp"

namespace enumkit {
namespace {

struct Prefix {
  std::vector<int> exists;  // y0
  std::vector<int> forall;  // y1
};

std::optional<Prefix> oracle_prefix(const QbfInstance& inst) {
  const auto& b = inst.blocks;
  Prefix p;
  if (b.empty()) return p;
  if (b.size() == 1) {
    (b[0].quantifier == Quantifier::exists ? p.exists : p.forall) = b[0].vars;
    return p;
  }
  if (b.size() == 2 && b[0].quantifier == Quantifier::exists) {
    p.exists = b[0].vars;
    p.forall = b[1].vars;
    return p;
  }
  return std::nullopt;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

bool qbf_evaluate(const QbfInstance& inst, const Assignment& free_values) {
  if (free_values.size() != inst.free_vars.size()) throw std::invalid_argument("free assignment has the wrong length");
  Assignment a(static_cast<std::size_t>(inst.num_vars()));
  for (std::size_t i = 0; i < inst.free_vars.size(); ++i)
    a.set(static_cast<std::size_t>(inst.free_vars[i] - 1), free_values[i]);

  std::function<bool(std::size_t, std::size_t)> eval = [&](std::size_t block, std::size_t j) -> bool {
    if (block == inst.blocks.size()) return evaluate_matrix(inst.matrix, a);
    const auto& qb = inst.blocks[block];
    if (j == qb.vars.size()) return eval(block + 1, 0);
    const auto pos = static_cast<std::size_t>(qb.vars[j] - 1);
    a.set(pos, false);
    const bool r0 = eval(block, j + 1);
    if (qb.quantifier == Quantifier::exists ? r0 : !r0) return r0;
    a.set(pos, true);
    return eval(block, j + 1);
  };
  return eval(0, 0);
}

bool qbf_oracle_supported(const QbfInstance& inst) { return oracle_prefix(inst).has_value(); }

StreamPtr<Assignment> qbf_enum(const QbfInstance& inst, QbfMode mode, Sigma2Options options) {
  inst.validate();
  if (mode == QbfMode::automatic) mode = qbf_oracle_supported(inst) ? QbfMode::oracle : QbfMode::exhaustive;

  if (mode == QbfMode::oracle) {
    auto p = oracle_prefix(inst);
    if (!p) throw InvalidInstance("quantifier prefix not supported by the oracle path");
    if (const auto* cnf = std::get_if<CnfFormula>(&inst.matrix); cnf && p->forall.empty())
      return flasher(std::make_shared<SatExtension>(*cnf, inst.free_vars));
    auto oracle = std::make_shared<Sigma2Oracle>(concat(inst.free_vars, p->exists), p->forall, inst.matrix, options);
    return flasher(std::make_shared<Sigma2Extension>(oracle, inst.free_vars));
  }

  if (inst.depth() > kQbfExhaustiveMaxDepth) throw InvalidInstance("quantifier depth above 4 is not supported");
  if (inst.num_vars() > kQbfExhaustiveMaxVars)
    throw ResourceLimit("exhaustive evaluation is limited to 20 variables");
  return brute_force_enumerate(inst.free_vars.size(), [&](const Assignment& x) { return qbf_evaluate(inst, x); });
}

PiToSigmaStream::PiToSigmaStream(const QbfInstance& inst, Sigma2Options options) : free_(inst.free_vars) {
  inst.validate();
  auto p = oracle_prefix(inst);
  if (!p) throw InvalidInstance("blocking loop needs a prefix of at most one exists and one forall block");
  const auto* cnf = std::get_if<CnfFormula>(&inst.matrix);
  use_sat_ = cnf && p->forall.empty();
  if (use_sat_) {
    sat_ = std::make_unique<SatOracle>(*cnf, options.sat);
    sat_->ensure_vars(inst.num_vars());
  } else {
    sigma2_ = std::make_unique<Sigma2Oracle>(concat(free_, p->exists), p->forall, inst.matrix, options);
  }
}

std::optional<Assignment> PiToSigmaStream::next() {
  if (done_) return std::nullopt;
  ++steps_;
  std::optional<Assignment> model;
  if (use_sat_) {
    round_sizes_.push_back(sat_->formula_size());
    auto r = sat_->solve({}, true);
    if (r.sat()) model = std::move(r.model);
  } else {
    round_sizes_.push_back(sigma2_->input_size());
    if (sigma2_->decide()) model = sigma2_->witness();
  }
  if (!model) {
    done_ = true;
    return std::nullopt;
  }
  Assignment x(free_.size());
  Clause differ;
  for (std::size_t i = 0; i < free_.size(); ++i) {
    const bool b = model->value_of(free_[i]);
    x.set(i, b);
    differ.push_back({free_[i], !b});
  }
  steps_ += free_.size();
  if (use_sat_) sat_->add_clause(differ);
  else sigma2_->add_side_clause(differ);
  return x;
}

StreamCounters PiToSigmaStream::counters() const {
  if (use_sat_) return {steps_, sat_->stats().calls, sat_->stats().calls, sat_->stats().max_input_size};
  return {steps_, sigma2_->stats().calls, sigma2_->np_calls(), sigma2_->stats().max_input_size};
}

StreamPtr<Assignment> pi_to_sigma_blocking(const QbfInstance& inst, Sigma2Options options) {
  return std::make_unique<PiToSigmaStream>(inst, options);
}

}  // namespace enumkit
