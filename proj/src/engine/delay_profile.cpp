#include "enumkit/engine/delay_profile.hpp"

#include <algorithm>

#include <json.hpp>

namespace enumkit {

std::uint64_t DelayProfile::max_calls_per_gap() const {
  return oracle_calls.empty() ? 0 : *std::max_element(oracle_calls.begin(), oracle_calls.end());
}

std::string DelayProfile::to_json() const {
  nlohmann::json j;
  j["outputs"] = outputs;
  j["gaps"] = steps;
  j["oracle_calls"] = oracle_calls;
  j["max_oracle_input"] = max_oracle_input;
  return j.dump();
}

namespace detail {

void record_gap(DelayProfile& p, const StreamCounters& before, const StreamCounters& after) {
  p.steps.push_back(after.steps - before.steps);
  p.oracle_calls.push_back(after.oracle_calls - before.oracle_calls);
  p.np_calls.push_back(after.np_calls - before.np_calls);
  p.max_input_after_gap.push_back(after.max_oracle_input);
  p.max_oracle_input = std::max(p.max_oracle_input, after.max_oracle_input);
}

}  // namespace detail
}  // namespace enumkit
