#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mcts/graph.hpp"

namespace mcts::detail {

// Dense ids for the edges of a graph, in lexicographic edge order.
class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g) : edges_(g.edges()) {}

  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }

  // -1 when {u, v} is not an edge.
  int find(Vertex u, Vertex v) const {
    const Edge e(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return it != edges_.end() && *it == e ? static_cast<int>(it - edges_.begin()) : -1;
  }

  int at(Vertex u, Vertex v) const {
    const int id = find(u, v);
    if (id < 0) throw std::invalid_argument("not an edge");
    return id;
  }

 private:
  std::vector<Edge> edges_;
};

}  // namespace mcts::detail
