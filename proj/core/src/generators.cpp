#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "mcts/graph.hpp"

namespace mcts {

namespace {

void require_positive(int size, int minimum, std::string_view what) {
  if (size < minimum) {
    throw std::invalid_argument(std::string(what) + " needs size >= " + std::to_string(minimum) +
                                ", got " + std::to_string(size));
  }
}

}  // namespace

Graph path_graph(int n) {
  require_positive(n, 1, "path");
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
  require_positive(n, 3, "cycle");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
  require_positive(n, 1, "complete");
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  }
  return Graph::from_edges(n, es);
}

Graph spider_complement(int branches) {
  require_positive(branches, 1, "spider_complement");
  const int n = 3 * branches + 1;
  std::vector<Edge> spider;
  for (int i = 0; i < branches; ++i) {
    const Vertex a = 3 * i + 1;
    spider.emplace_back(0, a);
    spider.emplace_back(a, a + 1);
    spider.emplace_back(a + 1, a + 2);
  }
  return complement(Graph::from_edges(n, spider));
}

Graph random_tree(int n, std::uint64_t seed) {
  require_positive(n, 1, "random_tree");
  if (n == 1) return Graph(1);
  if (n == 2) {
    const Edge e(0, 1);
    return Graph::from_edges(2, std::span(&e, 1));
  }
  // Decode a random Pruefer sequence. Plain modulo keeps the output identical
  // across standard libraries for a given seed.
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
  std::vector<int> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> es;
  for (Vertex c : code) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    es.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  es.emplace_back(a, b);
  return Graph::from_edges(n, es);
}

GraphFamily parse_family(std::string_view name) {
  if (name == "path") return GraphFamily::kPath;
  if (name == "cycle") return GraphFamily::kCycle;
  if (name == "complete") return GraphFamily::kComplete;
  if (name == "path_complement") return GraphFamily::kPathComplement;
  if (name == "spider_complement") return GraphFamily::kSpiderComplement;
  if (name == "random_tree") return GraphFamily::kRandomTree;
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::kPath: return "path";
    case GraphFamily::kCycle: return "cycle";
    case GraphFamily::kComplete: return "complete";
    case GraphFamily::kPathComplement: return "path_complement";
    case GraphFamily::kSpiderComplement: return "spider_complement";
    case GraphFamily::kRandomTree: return "random_tree";
  }
  return "unknown";
}

Graph generate(GraphFamily family, int size, std::uint64_t seed) {
  switch (family) {
    case GraphFamily::kPath: return path_graph(size);
    case GraphFamily::kCycle: return cycle_graph(size);
    case GraphFamily::kComplete: return complete_graph(size);
    case GraphFamily::kPathComplement: return complement(path_graph(size));
    case GraphFamily::kSpiderComplement: return spider_complement(size);
    case GraphFamily::kRandomTree: return random_tree(size, seed);
  }
  throw std::invalid_argument("unknown graph family");
}

}  // namespace mcts
