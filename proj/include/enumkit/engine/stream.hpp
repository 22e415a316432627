#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace enumkit {

/// Cumulative work counters an engine reports. steps are abstract work units
/// counted at fixed checkpoints; oracle_calls are calls the engine issued to
/// its own oracle; np_calls are propositional SAT calls underneath.
struct StreamCounters {
  std::uint64_t steps = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t np_calls = 0;
  std::size_t max_oracle_input = 0;

  StreamCounters& operator+=(const StreamCounters& o) {
    steps += o.steps;
    oracle_calls += o.oracle_calls;
    np_calls += o.np_calls;
    max_oracle_input = std::max(max_oracle_input, o.max_oracle_input);
    return *this;
  }
};

/// Single-consumer enumeration cursor. next() returns each solution once and
/// stays empty after the first empty result.
template <class T>
class SolutionStream {
 public:
  using value_type = T;

  virtual ~SolutionStream() = default;
  virtual std::optional<T> next() = 0;
  virtual StreamCounters counters() const { return {}; }
};

template <class T>
using StreamPtr = std::unique_ptr<SolutionStream<T>>;

using Colouring = std::vector<std::uint8_t>;

template <class T>
class VectorStream final : public SolutionStream<T> {
 public:
  explicit VectorStream(std::vector<T> items) : items_(std::move(items)) {}

  std::optional<T> next() override {
    ++steps_;
    if (pos_ >= items_.size()) return std::nullopt;
    return items_[pos_++];
  }
  StreamCounters counters() const override { return {steps_, 0, 0, 0}; }

 private:
  std::vector<T> items_;
  std::size_t pos_ = 0;
  std::uint64_t steps_ = 0;
};

template <class T>
StreamPtr<T> make_vector_stream(std::vector<T> items) {
  return std::make_unique<VectorStream<T>>(std::move(items));
}

/// Applies f to every element; elements mapped to nullopt are skipped.
template <class T, class U>
class MapStream final : public SolutionStream<U> {
 public:
  MapStream(StreamPtr<T> inner, std::function<std::optional<U>(const T&)> f) : inner_(std::move(inner)), f_(std::move(f)) {}

  std::optional<U> next() override {
    while (!done_) {
      auto t = inner_->next();
      if (!t) {
        done_ = true;
        break;
      }
      if (auto u = f_(*t)) return u;
    }
    return std::nullopt;
  }
  StreamCounters counters() const override { return inner_->counters(); }

 private:
  StreamPtr<T> inner_;
  std::function<std::optional<U>(const T&)> f_;
  bool done_ = false;
};

template <class T, class U>
StreamPtr<U> map_stream(StreamPtr<T> inner, std::function<std::optional<U>(const T&)> f) {
  return std::make_unique<MapStream<T, U>>(std::move(inner), std::move(f));
}

template <class T>
std::vector<T> drain(SolutionStream<T>& s, std::optional<std::size_t> limit = std::nullopt) {
  std::vector<T> out;
  while (!limit || out.size() < *limit) {
    auto v = s.next();
    if (!v) break;
    out.push_back(std::move(*v));
  }
  return out;
}

}  // namespace enumkit
