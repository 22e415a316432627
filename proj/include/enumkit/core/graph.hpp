#pragma once

#include <set>
#include <utility>
#include <vector>

namespace enumkit {

/// Undirected simple graph on vertices 1..num_vertices. Edges are stored
/// with first < second.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices) : n_(num_vertices) {}

  int num_vertices() const noexcept { return n_; }
  const std::set<std::pair<int, int>>& edges() const noexcept { return edges_; }

  /// Throws InvalidInstance for out-of-range endpoints or loops.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  std::vector<int> neighbours(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::set<std::pair<int, int>> edges_;
};

/// Vertices 1..num_vertices; a set of nonempty hyperedges.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int num_vertices) : n_(num_vertices) {}

  int num_vertices() const noexcept { return n_; }
  const std::set<std::set<int>>& edges() const noexcept { return edges_; }

  /// Widens the vertex range if needed; throws InvalidInstance on an empty edge.
  void add_edge(std::set<int> edge);

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::set<std::set<int>> edges_;
};

}  // namespace enumkit
