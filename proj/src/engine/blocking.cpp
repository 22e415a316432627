#include "enumkit/engine/blocking.hpp"

#include <numeric>

#include "enumkit/core/errors.hpp"

namespace enumkit {

BlockingEnumerator::BlockingEnumerator(const CnfFormula& f, SatOptions options) : oracle_(f, options) {
  projection_.resize(static_cast<std::size_t>(f.num_vars));
  std::iota(projection_.begin(), projection_.end(), 1);
}

BlockingEnumerator::BlockingEnumerator(const CnfFormula& f, std::vector<int> projection, SatOptions options)
    : oracle_(f, options), projection_(std::move(projection)) {
  for (int v : projection_) {
    if (v < 1 || v > f.num_vars) throw InvalidInstance("projection variable outside the formula");
  }
}

std::optional<Assignment> BlockingEnumerator::next() {
  if (done_) return std::nullopt;
  ++steps_;
  auto r = oracle_.solve({}, true);
  if (!r.sat()) {
    done_ = true;
    return std::nullopt;
  }
  Assignment out(projection_.size());
  Clause block;
  for (std::size_t i = 0; i < projection_.size(); ++i) {
    const bool b = r.model->value_of(projection_[i]);
    out.set(i, b);
    block.push_back({projection_[i], !b});
  }
  steps_ += projection_.size();
  oracle_.add_clause(block);
  blocked_.push_back(std::move(block));
  return out;
}

StreamCounters BlockingEnumerator::counters() const {
  return {steps_, oracle_.stats().calls, oracle_.stats().calls, oracle_.stats().max_input_size};
}

StreamPtr<Assignment> blocking_enumerate(const CnfFormula& f, std::vector<int> projection, SatOptions options) {
  return std::make_unique<BlockingEnumerator>(f, std::move(projection), options);
}

}  // namespace enumkit
