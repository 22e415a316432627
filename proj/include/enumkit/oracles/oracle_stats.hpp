#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace enumkit {

/// Per-oracle call accounting. The input size of a call is the size of
/// everything written to the oracle for that call (formula plus assumptions).
struct OracleStats {
  std::uint64_t calls = 0;
  std::size_t max_input_size = 0;
  bool keep_per_call_sizes = false;
  std::vector<std::size_t> per_call_sizes;

  void record(std::size_t input_size) {
    ++calls;
    max_input_size = std::max(max_input_size, input_size);
    if (keep_per_call_sizes) per_call_sizes.push_back(input_size);
  }
};

}  // namespace enumkit
