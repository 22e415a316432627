#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enumkit/engine/stream.hpp"

namespace enumkit {

/// Work per gap: gap 0 precedes the first output, the last gap follows the
/// last output (ending with the empty next()). All lists have outputs + 1
/// entries unless the run was cut short by a limit, in which case the final
/// gap is the one before the last emitted output.
struct DelayProfile {
  std::size_t outputs = 0;
  std::vector<std::uint64_t> steps;
  std::vector<std::uint64_t> oracle_calls;
  std::vector<std::uint64_t> np_calls;
  std::vector<std::size_t> max_input_after_gap;  // cumulative maximum
  std::size_t max_oracle_input = 0;

  std::uint64_t max_calls_per_gap() const;
  /// {"outputs": N, "gaps": [...], "oracle_calls": [...], "max_oracle_input": M}
  std::string to_json() const;
};

namespace detail {
void record_gap(DelayProfile& p, const StreamCounters& before, const StreamCounters& after);
}

template <class T>
std::pair<std::vector<T>, DelayProfile> delay_profile(SolutionStream<T>& s,
                                                      std::optional<std::size_t> limit = std::nullopt) {
  std::vector<T> out;
  DelayProfile p;
  auto before = s.counters();
  while (true) {
    if (limit && out.size() >= *limit) break;
    auto v = s.next();
    auto after = s.counters();
    detail::record_gap(p, before, after);
    before = after;
    if (!v) break;
    out.push_back(std::move(*v));
  }
  p.outputs = out.size();
  return {std::move(out), std::move(p)};
}

}  // namespace enumkit
