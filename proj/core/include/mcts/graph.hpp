#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcts {

using Vertex = int;

// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on the dense vertex ids [0, vertex_count).
// Immutable once built; every query is const.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  // Throws std::invalid_argument on self-loops, duplicates or out-of-range ids.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

  // Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

  // Lexicographically sorted.
  std::vector<Edge> edges() const;

  bool is_complete() const noexcept;

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void add_edge(Vertex u, Vertex v);

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Disjoint nonempty blocks covering every vertex. Blocks are sorted internally
// and ordered by their smallest member.
struct VertexPartition {
  std::vector<std::vector<Vertex>> blocks;

  std::size_t size() const noexcept { return blocks.size(); }
  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

Graph complement(const Graph& g);

VertexPartition connected_components(const Graph& g);

// Connected components of the complement, computed without materializing it.
VertexPartition co_connected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_co_connected(const Graph& g);

// Whether the subgraph induced by `vertices` is connected / co-connected.
// The empty set and singletons count as both.
bool induces_connected(const Graph& g, std::span<const Vertex> vertices);
bool induces_co_connected(const Graph& g, std::span<const Vertex> vertices);

// Articulation points of a connected graph, ascending. Throws
// std::invalid_argument if g is disconnected.
std::vector<Vertex> cut_vertices(const Graph& g);

// Breadth-first spanning tree from vertex 0, visiting neighbors in ascending
// order. Throws std::invalid_argument if g is disconnected.
std::vector<Edge> spanning_tree(const Graph& g);

bool is_tree(const Graph& g);

// ---- text formats ---------------------------------------------------------

// "n m" header followed by m lines "u v"; '#' starts a comment line.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

// Inverse of parse_graph with edges sorted lexicographically.
std::string format_graph(const Graph& g);

// Plain structural Graphviz dump.
std::string format_dot(const Graph& g, std::string_view name = "G");

// ---- named families -------------------------------------------------------

enum class GraphFamily {
  kPath,
  kCycle,
  kComplete,
  kPathComplement,
  kSpiderComplement,
  kRandomTree,
};

// Parses "path", "cycle", "complete", "path_complement", "spider_complement",
// "random_tree". Throws std::invalid_argument otherwise.
GraphFamily parse_family(std::string_view name);
std::string_view family_name(GraphFamily family);

// `size` is the vertex count except for kSpiderComplement, where it is the
// number of three-edge branches (3*size + 1 vertices). `seed` only matters for
// kRandomTree. Throws std::invalid_argument on a nonpositive size.
Graph generate(GraphFamily family, int size, std::uint64_t seed = 0);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// Complement of the spider with center 0 and branches
// 0 - (3i+1) - (3i+2) - (3i+3), i < branches.
Graph spider_complement(int branches);

Graph random_tree(int n, std::uint64_t seed);

}  // namespace mcts
