#include "enumkit/logic/minimal.hpp"

#include <algorithm>
#include <numeric>

#include "enumkit/engine/extension.hpp"
#include "enumkit/logic/cardinality.hpp"

namespace enumkit {

CircumscriptionStream::CircumscriptionStream(const CnfFormula& f, SatOptions options)
    : n_(f.num_vars), oracle_(f, options) {}

std::optional<Assignment> CircumscriptionStream::next() {
  if (done_) return std::nullopt;
  auto r = oracle_.solve({}, true);
  ++steps_;
  if (!r.sat()) {
    done_ = true;
    return std::nullopt;
  }
  Assignment m = *r.model;
  for (int i = 1; i <= n_; ++i) {
    if (!m.value_of(i)) continue;
    ++steps_;
    std::vector<Literal> inside;
    for (int j = 1; j <= n_; ++j)
      if (j == i || !m.value_of(j)) inside.push_back(Literal::neg(j));
    auto smaller = oracle_.solve(inside, true);
    if (smaller.sat()) m = *smaller.model;
  }
  Assignment out(static_cast<std::size_t>(n_));
  Clause block;
  for (int i = 1; i <= n_; ++i) {
    out.set(static_cast<std::size_t>(i - 1), m.value_of(i));
    if (m.value_of(i)) block.push_back(Literal::neg(i));
  }
  oracle_.add_clause(block);
  blocked_.push_back(std::move(block));
  return out;
}

StreamCounters CircumscriptionStream::counters() const {
  return {steps_, oracle_.stats().calls, oracle_.stats().calls, oracle_.stats().max_input_size};
}

StreamPtr<Assignment> circumscription_enum(const CnfFormula& f, SatOptions options) {
  return std::make_unique<CircumscriptionStream>(f, options);
}

std::vector<Assignment> circumscription_sorted(const CnfFormula& f, SatOptions options) {
  CircumscriptionStream s(f, options);
  auto out = drain(s);
  std::sort(out.begin(), out.end());
  return out;
}

CardMinStream::CardMinStream(CnfFormula f, SatOptions options) : f_(std::move(f)), options_(options) {}

void CardMinStream::start() {
  started_ = true;
  std::vector<int> vars(static_cast<std::size_t>(f_.num_vars));
  std::iota(vars.begin(), vars.end(), 1);
  for (int k = 0; k <= f_.num_vars; ++k) {
    CnfFormula g = f_;
    add_cardinality(g, {vars, k, CardinalitySense::at_most});
    SatOracle oracle(g, options_);
    const bool sat = oracle.solve().sat();
    ++scan_calls_;
    scan_max_input_ = std::max(scan_max_input_, oracle.stats().max_input_size);
    if (sat) {
      k_star_ = k;
      break;
    }
  }
  if (!k_star_) return;
  CnfFormula g = f_;
  add_cardinality(g, {vars, *k_star_, CardinalitySense::exactly});
  inner_ = std::make_unique<Flasher>(std::make_shared<SatExtension>(g, vars, options_));
}

std::optional<Assignment> CardMinStream::next() {
  if (!started_) start();
  if (!inner_) return std::nullopt;
  return inner_->next();
}

StreamCounters CardMinStream::counters() const {
  StreamCounters c{0, scan_calls_, scan_calls_, scan_max_input_};
  if (inner_) c += inner_->counters();
  return c;
}

StreamPtr<Assignment> cardmin_enum(const CnfFormula& f, SatOptions options) {
  return std::make_unique<CardMinStream>(f, options);
}

}  // namespace enumkit
