#include "mcts/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mcts {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) {
    throw std::invalid_argument("negative vertex count");
  }
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (!contains(u) || !contains(v)) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} has an endpoint out of range");
  }
  if (u == v) {
    throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  }
  auto& row = adjacency_[u];
  if (std::find(row.begin(), row.end(), v) != row.end()) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  }
  row.push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const Vertex target = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_complete() const noexcept {
  const auto n = static_cast<std::size_t>(vertex_count());
  return edge_count_ == n * (n == 0 ? 0 : n - 1) / 2;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> local(adjacency_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!contains(vertices[i])) throw std::invalid_argument("induced: vertex out of range");
    if (local[vertices[i]] != -1) throw std::invalid_argument("induced: repeated vertex");
    local[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : adjacency_[vertices[i]]) {
      const int j = local[w];
      if (j > static_cast<int>(i)) es.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return from_edges(static_cast<int>(vertices.size()), es);
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u) {
    const auto& row = g.neighbors(u);
    auto it = row.begin();
    for (Vertex v = u + 1; v < n; ++v) {
      while (it != row.end() && *it < v) ++it;
      if (it == row.end() || *it != v) es.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, es);
}

namespace {

VertexPartition finish_partition(std::vector<std::vector<Vertex>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return VertexPartition{std::move(blocks)};
}

}  // namespace

VertexPartition connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    blocks.push_back(queue);
  }
  return finish_partition(std::move(blocks));
}

VertexPartition co_connected_components(const Graph& g) {
  // BFS in the complement: keep the not-yet-reached vertices in a list and,
  // from each dequeued vertex, move every non-neighbor across. Each scan is
  // charged either to a removed vertex or to an edge of g.
  const int n = g.vertex_count();
  std::vector<Vertex> unvisited(n);
  std::iota(unvisited.begin(), unvisited.end(), 0);
  std::vector<char> mark(n, 0);
  std::vector<std::vector<Vertex>> blocks;
  while (!unvisited.empty()) {
    std::vector<Vertex> block{unvisited.front()};
    unvisited.erase(unvisited.begin());
    for (std::size_t head = 0; head < block.size(); ++head) {
      const Vertex x = block[head];
      for (Vertex w : g.neighbors(x)) mark[w] = 1;
      std::vector<Vertex> keep;
      for (Vertex w : unvisited) {
        if (mark[w]) {
          keep.push_back(w);
        } else {
          block.push_back(w);
        }
      }
      for (Vertex w : g.neighbors(x)) mark[w] = 0;
      unvisited.swap(keep);
    }
    blocks.push_back(std::move(block));
  }
  return finish_partition(std::move(blocks));
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_co_connected(const Graph& g) { return co_connected_components(g).size() <= 1; }

bool induces_connected(const Graph& g, std::span<const Vertex> vertices) {
  return is_connected(g.induced(vertices));
}

bool induces_co_connected(const Graph& g, std::span<const Vertex> vertices) {
  return is_co_connected(g.induced(vertices));
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  const int n = g.vertex_count();
  if (!is_connected(g)) throw std::invalid_argument("cut_vertices: graph is disconnected");
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;

  // Iterative DFS: (vertex, parent, next neighbor index).
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& row = g.neighbors(f.v);
      if (f.next < row.size()) {
        const Vertex w = row[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (parent.v != root && low[done.v] >= disc[parent.v]) is_cut[parent.v] = 1;
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> spanning_tree(const Graph& g) {
  const int n = g.vertex_count();
  if (!is_connected(g)) throw std::invalid_argument("spanning_tree: graph is disconnected");
  std::vector<Edge> tree;
  if (n == 0) return tree;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex w : g.neighbors(x)) {
      if (seen[w]) continue;
      seen[w] = 1;
      tree.emplace_back(x, w);
      queue.push_back(w);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 &&
         g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count()) && is_connected(g);
}

}  // namespace mcts
