#include "enumkit/engine/brute_force.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "enumkit/core/errors.hpp"

namespace enumkit {
namespace {

// Variable 1 is the most significant bit, so ascending masks are lex order.
Assignment from_mask(std::uint32_t mask, std::size_t n) {
  Assignment a(n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, (mask >> (n - 1 - i)) & 1U);
  return a;
}

}  // namespace

std::vector<Assignment> brute_force_solutions(std::size_t n, const std::function<bool(const Assignment&)>& check,
                                              BruteFilter filter) {
  if (n > kBruteForceMaxLength)
    throw ResourceLimit("brute force is capped at " + std::to_string(kBruteForceMaxLength) + " positions");
  const std::uint32_t count = 1U << n;
  std::vector<std::uint8_t> accepted(count, 0);
  for (std::uint32_t m = 0; m < count; ++m) accepted[m] = check(from_mask(m, n)) ? 1 : 0;

  std::vector<std::uint8_t> keep = accepted;
  switch (filter) {
    case BruteFilter::all: break;
    case BruteFilter::subset_minimal:
    case BruteFilter::subset_maximal: {
      // reach[m]: some accepted set lies below m (above m when maximizing).
      const bool minimal = filter == BruteFilter::subset_minimal;
      std::vector<std::uint8_t> reach = accepted;
      for (std::size_t b = 0; b < n; ++b)
        for (std::uint32_t m = 0; m < count; ++m)
          if (((m >> b) & 1U) == (minimal ? 1U : 0U)) reach[m] |= reach[m ^ (1U << b)];
      for (std::uint32_t m = 0; m < count; ++m) {
        if (!accepted[m]) continue;
        for (std::size_t b = 0; b < n && keep[m]; ++b) {
          const bool has = (m >> b) & 1U;
          if (has == minimal && reach[m ^ (1U << b)]) keep[m] = 0;
        }
      }
      break;
    }
    case BruteFilter::card_minimal:
    case BruteFilter::card_maximal: {
      int best = -1;
      for (std::uint32_t m = 0; m < count; ++m) {
        if (!accepted[m]) continue;
        const int w = std::popcount(m);
        if (best < 0 || (filter == BruteFilter::card_minimal ? w < best : w > best)) best = w;
      }
      for (std::uint32_t m = 0; m < count; ++m)
        if (accepted[m] && std::popcount(m) != best) keep[m] = 0;
      break;
    }
  }
  std::vector<Assignment> out;
  for (std::uint32_t m = 0; m < count; ++m)
    if (keep[m]) out.push_back(from_mask(m, n));
  return out;
}

StreamPtr<Assignment> brute_force_enumerate(std::size_t n, const std::function<bool(const Assignment&)>& check,
                                            BruteFilter filter) {
  return make_vector_stream(brute_force_solutions(n, check, filter));
}

}  // namespace enumkit
