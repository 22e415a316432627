#include "enumkit/kr/diagnosis.hpp"

#include <numeric>

#include "enumkit/core/errors.hpp"
#include "enumkit/engine/extension.hpp"
#include "enumkit/logic/cardinality.hpp"

namespace enumkit {

void validate_diagnosis(const DiagnosisInstance& inst, SatOptions options) {
  SatOracle all(inst.num_vars(), options);
  for (const auto& c : inst.components) all.add_formula(c);
  if (!all.solve().sat()) throw InvalidInstance("components are inconsistent");
  SatOracle mu(inst.mu, options);
  mu.ensure_vars(inst.num_vars());
  if (!mu.solve().sat()) throw InvalidInstance("observation is unsatisfiable");
  all.add_formula(inst.mu);
  if (all.solve().sat()) throw InvalidInstance("components are consistent with the observation; nothing to diagnose");
}

CnfFormula diagnosis_encoding(const DiagnosisInstance& inst) {
  const int v = inst.num_vars();
  CnfFormula out(v + static_cast<int>(inst.components.size()));
  for (const auto& c : inst.mu.clauses) out.add_clause(c);
  for (std::size_t i = 0; i < inst.components.size(); ++i) {
    const Literal off = Literal::neg(v + 1 + static_cast<int>(i));
    for (const auto& c : inst.components[i].clauses) {
      Clause guarded = c;
      guarded.push_back(off);
      out.add_clause(guarded);
    }
  }
  return out;
}

DiagnosisStream::DiagnosisStream(DiagnosisInstance inst, SatOptions options)
    : inst_(std::move(inst)), options_(options) {}

void DiagnosisStream::start() {
  started_ = true;
  const int n = static_cast<int>(inst_.components.size());
  const auto base = diagnosis_encoding(inst_);
  std::vector<int> selectors(static_cast<std::size_t>(n));
  std::iota(selectors.begin(), selectors.end(), inst_.num_vars() + 1);
  for (int c = n; c >= 0; --c) {
    CnfFormula g = base;
    add_cardinality(g, {selectors, c, CardinalitySense::exactly});
    SatOracle oracle(g, options_);
    const bool sat = oracle.solve().sat();
    ++scan_calls_;
    scan_max_input_ = std::max(scan_max_input_, oracle.stats().max_input_size);
    if (sat) {
      c_star_ = c;
      CnfFormula h = base;
      add_cardinality(h, {selectors, c, CardinalitySense::exactly});
      inner_ = std::make_unique<Flasher>(std::make_shared<SatExtension>(h, selectors, options_));
      return;
    }
  }
}

std::optional<Assignment> DiagnosisStream::next() {
  if (!started_) start();
  if (!inner_) return std::nullopt;
  return inner_->next();
}

StreamCounters DiagnosisStream::counters() const {
  StreamCounters c{0, scan_calls_, scan_calls_, scan_max_input_};
  if (inner_) c += inner_->counters();
  return c;
}

StreamPtr<Assignment> diagnosis_enum(const DiagnosisInstance& inst, SatOptions options) {
  validate_diagnosis(inst, options);
  return std::make_unique<DiagnosisStream>(inst, options);
}

MbdReduction cardmin_to_mbd() {
  MbdReduction red;
  red.sigma = [](const CnfFormula& f) {
    if (f.evaluate(Assignment(static_cast<std::size_t>(f.num_vars))))
      throw InvalidInstance("formula is satisfied by the all-zero assignment");
    const int n = f.num_vars;
    const Literal x0 = Literal::pos(n + 1);
    DiagnosisInstance d;
    CnfFormula shared(n + 1);
    for (const auto& c : f.clauses) {
      Clause widened = c;
      widened.push_back(x0);
      shared.add_clause(widened);
    }
    for (int i = 1; i <= n; ++i) {
      CnfFormula phi = shared;
      phi.add_clause({Literal::neg(i), x0});
      d.components.push_back(std::move(phi));
    }
    d.mu = CnfFormula(n + 1);
    d.mu.add_clause({~x0});
    return d;
  };
  red.tau = [](const CnfFormula& f, const Assignment& retained) -> StreamPtr<Assignment> {
    Assignment x(retained.size());
    for (std::size_t i = 0; i < retained.size(); ++i) x.set(i, !retained[i]);
    if (x.size() != static_cast<std::size_t>(f.num_vars) || !f.evaluate(x)) return make_vector_stream<Assignment>({});
    return make_vector_stream<Assignment>({x});
  };
  red.bound = [](std::size_t) { return std::size_t{1}; };
  red.size = [](const CnfFormula& f) { return f.size() + static_cast<std::size_t>(f.num_vars); };
  return red;
}

}  // namespace enumkit
