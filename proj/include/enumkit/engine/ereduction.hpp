#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "enumkit/engine/stream.hpp"

namespace enumkit {

/// Enumeration reduction from problem 1 (instances I1, solutions S1) to
/// problem 2 (instances I2, solutions S2). tau(x, y) streams the problem-1
/// solutions a problem-2 solution y of sigma(x) stands for; bound(|x|) caps
/// how many y map to one problem-1 solution.
template <class I1, class S1, class I2, class S2>
struct EReduction {
  using source_instance = I1;
  using source_solution = S1;
  using target_instance = I2;
  using target_solution = S2;

  std::function<I2(const I1&)> sigma;
  std::function<StreamPtr<S1>(const I1&, const S2&)> tau;
  std::function<std::size_t(std::size_t)> bound;
  std::function<std::size_t(const I1&)> size;
};

/// Observable trace of a reduction run.
struct ReductionTrace {
  std::size_t inner_outputs = 0;
  std::size_t tau_empty = 0;    // inner outputs whose tau stream was empty
  std::size_t tau_elements = 0; // elements pulled, duplicates included
  std::size_t duplicates = 0;
};

/// Runs a reduction over a stream of target solutions. Each round pulls up to
/// bound(|x|) tau elements (finishing the current tau stream before the next
/// inner solution is requested) into an insertion-ordered duplicate-free
/// queue, then emits the lowest-index element not yet emitted. Queue
/// elements are never deleted. Once the inner stream is exhausted the rest of
/// the queue is flushed.
template <class I1, class S1, class I2, class S2>
class ReductionStream final : public SolutionStream<S1> {
 public:
  ReductionStream(EReduction<I1, S1, I2, S2> red, I1 x, StreamPtr<S2> inner)
      : red_(std::move(red)), x_(std::move(x)), inner_(std::move(inner)) {
    per_round_ = std::max<std::size_t>(1, red_.bound ? red_.bound(red_.size ? red_.size(x_) : 0) : 1);
  }

  std::optional<S1> next() override {
    while (true) {
      if (!inner_done_) fill_round();
      ++steps_;
      if (emitted_ < queue_.size()) return queue_[emitted_++];
      if (inner_done_) return std::nullopt;
    }
  }

  StreamCounters counters() const override {
    StreamCounters c = retired_;
    c += inner_->counters();
    if (tau_) c += tau_->counters();
    c.steps += steps_;
    return c;
  }

  const ReductionTrace& trace() const noexcept { return trace_; }
  /// Insertion-ordered queue; the first emitted() entries have been output.
  const std::vector<S1>& queue() const noexcept { return queue_; }
  std::size_t emitted() const noexcept { return emitted_; }

 private:
  void fill_round() {
    std::size_t pulled = 0;
    while (pulled < per_round_) {
      if (!tau_) {
        auto y = inner_->next();
        ++steps_;
        if (!y) {
          inner_done_ = true;
          return;
        }
        ++trace_.inner_outputs;
        tau_ = red_.tau(x_, *y);
        tau_yielded_ = false;
      }
      auto z = tau_->next();
      ++steps_;
      if (!z) {
        if (!tau_yielded_) ++trace_.tau_empty;
        retired_ += tau_->counters();
        tau_.reset();
        continue;
      }
      tau_yielded_ = true;
      ++pulled;
      ++trace_.tau_elements;
      if (seen_.insert(*z).second) queue_.push_back(std::move(*z));
      else ++trace_.duplicates;
    }
  }

  EReduction<I1, S1, I2, S2> red_;
  I1 x_;
  StreamPtr<S2> inner_;
  StreamPtr<S1> tau_;
  bool tau_yielded_ = false;
  bool inner_done_ = false;
  std::size_t per_round_ = 1;
  std::vector<S1> queue_;
  std::set<S1> seen_;
  std::size_t emitted_ = 0;
  std::uint64_t steps_ = 0;
  StreamCounters retired_;
  ReductionTrace trace_;
};

template <class I1, class S1, class I2, class S2>
std::unique_ptr<ReductionStream<I1, S1, I2, S2>> ereduce_execute(const EReduction<I1, S1, I2, S2>& red, const I1& x,
                                                                 StreamPtr<S2> inner) {
  return std::make_unique<ReductionStream<I1, S1, I2, S2>>(red, x, std::move(inner));
}

/// sigma3 = sigma23 . sigma12; tau3(x, y) runs r12 over the stream
/// tau23(sigma12(x), y); bound3 = bound12 . bound23.
template <class I1, class S1, class I2, class S2, class I3, class S3>
EReduction<I1, S1, I3, S3> ereduce_compose(const EReduction<I1, S1, I2, S2>& r12, const EReduction<I2, S2, I3, S3>& r23) {
  EReduction<I1, S1, I3, S3> out;
  out.sigma = [r12, r23](const I1& x) { return r23.sigma(r12.sigma(x)); };
  out.tau = [r12, r23](const I1& x, const S3& y) -> StreamPtr<S1> {
    return ereduce_execute(r12, x, r23.tau(r12.sigma(x), y));
  };
  out.bound = [r12, r23](std::size_t n) { return r12.bound(r23.bound(n)); };
  out.size = r12.size;
  return out;
}

/// sigma = id, tau(x, y) = {y}, bound 1.
template <class I, class S>
EReduction<I, S, I, S> identity_reduction() {
  EReduction<I, S, I, S> r;
  r.sigma = [](const I& x) { return x; };
  r.tau = [](const I&, const S& y) -> StreamPtr<S> { return make_vector_stream(std::vector<S>{y}); };
  r.bound = [](std::size_t) { return std::size_t{1}; };
  r.size = [](const I&) { return std::size_t{0}; };
  return r;
}

}  // namespace enumkit
