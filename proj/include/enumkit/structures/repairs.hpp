#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "enumkit/core/assignment.hpp"
#include "enumkit/core/database.hpp"
#include "enumkit/core/formula.hpp"
#include "enumkit/engine/stream.hpp"

namespace enumkit {

/// Atom indices (0-based) jointly violating one EGD.
using ConflictSet = std::set<std::size_t>;

/// One conflict per body match whose equated variables get different
/// constants; duplicates merged and supersets of other conflicts removed.
/// Sorted by size, then lexicographically.
std::vector<ConflictSet> ground_egds(const DatabaseInstance& d, const std::vector<Egd>& egds);

/// Direct EGD check of the sub-instance selected by keep.
bool satisfies_egds(const DatabaseInstance& d, const std::vector<Egd>& egds, const Assignment& keep);

/// Variables 1..n; variable v true means v is NOT in the hitting set when
/// complement is set (so the models are maximal independent sets), and
/// means v IS in it otherwise. The models projected onto 1..n are exactly the
/// minimal hitting sets of edges (vertices 1-based). Auxiliaries
/// t(e, v) = "e is hit only by v" start at n + 1.
CnfFormula minimal_hitting_set_encoding(int n, const std::vector<std::set<int>>& edges, bool complement);

/// Keep/delete vectors (1 = kept) of all repairs, lex order.
StreamPtr<Assignment> repair_enum(const DatabaseInstance& d, const std::vector<Egd>& egds);

}  // namespace enumkit
