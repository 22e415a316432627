#include "enumkit/core/graph.hpp"

#include <algorithm>
#include <string>

#include "enumkit/core/errors.hpp"

namespace enumkit {

void Graph::add_edge(int u, int v) {
  if (u < 1 || v < 1 || u > n_ || v > n_)
    throw InvalidInstance("edge {" + std::to_string(u) + "," + std::to_string(v) + "} references a missing vertex");
  if (u == v) throw InvalidInstance("loop at vertex " + std::to_string(u));
  edges_.insert(std::minmax(u, v));
}

bool Graph::adjacent(int u, int v) const { return edges_.count(std::minmax(u, v)) != 0; }

std::vector<int> Graph::neighbours(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Hypergraph::add_edge(std::set<int> edge) {
  if (edge.empty()) throw InvalidInstance("empty hyperedge");
  if (*edge.begin() < 1) throw InvalidInstance("hyperedge vertex must be >= 1");
  n_ = std::max(n_, *edge.rbegin());
  edges_.insert(std::move(edge));
}

}  // namespace enumkit
