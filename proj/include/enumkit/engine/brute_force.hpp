#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "enumkit/core/assignment.hpp"
#include "enumkit/engine/stream.hpp"

namespace enumkit {

inline constexpr std::size_t kBruteForceMaxLength = 24;

enum class BruteFilter { all, subset_minimal, subset_maximal, card_minimal, card_maximal };

/// Every length-n vector accepted by check, filtered, in lex order. Minimal
/// and maximal refer to the set of 1-positions or to the Hamming weight.
/// Throws ResourceLimit for n > 24.
std::vector<Assignment> brute_force_solutions(std::size_t n, const std::function<bool(const Assignment&)>& check,
                                              BruteFilter filter = BruteFilter::all);

StreamPtr<Assignment> brute_force_enumerate(std::size_t n, const std::function<bool(const Assignment&)>& check,
                                            BruteFilter filter = BruteFilter::all);

}  // namespace enumkit
