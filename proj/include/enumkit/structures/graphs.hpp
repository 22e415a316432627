#pragma once

#include <set>
#include <vector>

#include "enumkit/core/assignment.hpp"
#include "enumkit/core/graph.hpp"
#include "enumkit/engine/stream.hpp"

namespace enumkit {

/// Minimal transversals as vertex bit vectors, lex order.
StreamPtr<Assignment> transversal_enum(const Hypergraph& h);

/// Closed neighbourhoods N[v] for v = 1..n.
std::vector<std::set<int>> closed_neighbourhoods(const Graph& g);

/// Minimal dominating sets = minimal transversals of the closed
/// neighbourhoods.
StreamPtr<Assignment> domset_enum(const Graph& g);

/// Proper colourings with colours 0..k-1, lex order over the colour vector.
/// Each vertex gets ceil(log2 k) bits (at least one), most significant
/// first, so the flasher's bit order is the colouring order.
StreamPtr<Colouring> colouring_enum(const Graph& g, int k);

bool is_proper_colouring(const Graph& g, const Colouring& c, int k);

}  // namespace enumkit
