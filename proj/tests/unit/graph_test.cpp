#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "mcts/error.hpp"
#include "mcts/graph.hpp"
#include "oracles.hpp"

using namespace mcts;

namespace {

Graph cop7() { return complement(path_graph(7)); }

bool spanning_tree_ok(const Graph& g, const std::vector<Edge>& tree) {
  if (static_cast<int>(tree.size()) != g.vertex_count() - 1) return false;
  for (const Edge& e : tree) {
    if (!g.adjacent(e.u, e.v)) return false;
  }
  return is_connected(Graph::from_edges(g.vertex_count(), tree));
}

}  // namespace

TEST_CASE("graph construction rejects non-simple input") {
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 3}}), std::invalid_argument);
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{2, 0}});
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("parse_graph") {
  SUBCASE("path on three vertices") {
    const Graph g = parse_graph("3 2\n0 1\n1 2\n");
    CHECK(g == path_graph(3));
  }
  SUBCASE("comments and blank lines") {
    const Graph g = parse_graph("# header next\n\n3 1\n# edge\n0 2\n");
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 2));
  }
  SUBCASE("complement of the 7-path round-trips") {
    const Graph g = cop7();
    CHECK(g.edge_count() == 15);
    CHECK(parse_graph(format_graph(g)) == g);
  }
  SUBCASE("errors carry line numbers") {
    auto line_of = [](std::string_view text) {
      try {
        parse_graph(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return -1;
    };
    CHECK(line_of("2 1\n0 0\n") == 2);          // self-loop
    CHECK(line_of("x y\n") == 1);               // header
    CHECK(line_of("3 2\n0 1\n1 0\n") == 3);     // duplicate
    CHECK(line_of("3 1\n0 5\n") == 2);          // out of range
    CHECK(line_of("3 1\n0 1\n1 2\n") == 3);     // too many
    CHECK(line_of("3 2\n0 1\n") >= 0);          // too few
    CHECK(line_of("") == 0);                    // missing header
    CHECK(line_of("3 1\n0 1 2\n") == 2);        // malformed edge
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)).edge_count() == 0);
  const Graph g = cop7();
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(0, 1));
  testing::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph r = testing::random_connected_graph(1 + i % 8, 0.4, rng);
    CHECK(complement(complement(r)) == r);
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(path_graph(3)).blocks == std::vector<std::vector<Vertex>>{{0, 1, 2}});
  CHECK(connected_components(Graph(3)).size() == 3);
  CHECK(connected_components(cop7()).size() == 1);
  const Graph g = Graph::from_edges(5, std::vector<Edge>{{3, 4}, {0, 2}});
  CHECK(connected_components(g).blocks == std::vector<std::vector<Vertex>>{{0, 2}, {1}, {3, 4}});
}

TEST_CASE("co-connected components") {
  CHECK(co_connected_components(path_graph(3)).blocks ==
        std::vector<std::vector<Vertex>>{{0, 2}, {1}});
  CHECK(co_connected_components(complete_graph(5)).size() == 5);
  CHECK(co_connected_components(cop7()).size() == 1);
  CHECK(is_co_connected(cop7()));

  testing::Rng rng(11);
  std::uniform_real_distribution<double> p(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_connected_graph(1 + i % 8, p(rng), rng);
    CHECK(co_connected_components(g) == connected_components(complement(g)));
  }
}

TEST_CASE("induced connectivity") {
  const Graph g = path_graph(4);
  const std::vector<Vertex> ends{0, 3};
  const std::vector<Vertex> head{0, 1, 2};
  CHECK_FALSE(induces_connected(g, ends));
  CHECK(induces_co_connected(g, ends));
  CHECK(induces_connected(g, head));
  CHECK_FALSE(induces_co_connected(g, head));
  CHECK(induces_connected(g, std::vector<Vertex>{}));
  CHECK(induces_co_connected(g, std::vector<Vertex>{2}));
}

TEST_CASE("cut vertices") {
  CHECK(cut_vertices(path_graph(3)) == std::vector<Vertex>{1});
  CHECK(cut_vertices(cycle_graph(5)).empty());
  CHECK_THROWS_AS(cut_vertices(Graph(2)), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph t = random_tree(3 + seed % 7, seed);
    std::vector<Vertex> internal;
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      if (t.degree(v) >= 2) internal.push_back(v);
    }
    CHECK(cut_vertices(t) == internal);
  }
  // Removal check against the definition.
  testing::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_connected_graph(3 + i % 6, 0.3, rng);
    std::vector<Vertex> expected;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::vector<Vertex> rest;
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (u != v) rest.push_back(u);
      }
      if (!induces_connected(g, rest)) expected.push_back(v);
    }
    CHECK(cut_vertices(g) == expected);
  }
}

TEST_CASE("spanning tree") {
  const Graph t = random_tree(8, 3);
  std::vector<Edge> edges = spanning_tree(t);
  CHECK(edges == t.edges());
  CHECK(spanning_tree(cycle_graph(4)).size() == 3);
  const auto tree = spanning_tree(cop7());
  CHECK(spanning_tree_ok(cop7(), tree));
  CHECK_THROWS_AS(spanning_tree(Graph(2)), std::invalid_argument);

  testing::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_connected_graph(1 + i % 9, 0.5, rng);
    const auto st = spanning_tree(g);
    CHECK(spanning_tree_ok(g, st));
    CHECK(st == spanning_tree(g));
  }
}

TEST_CASE("is_tree") {
  CHECK(is_tree(path_graph(5)));
  CHECK(is_tree(Graph(1)));
  CHECK_FALSE(is_tree(cycle_graph(4)));
  CHECK_FALSE(is_tree(Graph(2)));
}

TEST_CASE("graph families") {
  CHECK(generate(GraphFamily::kPathComplement, 7).edge_count() == 15);
  CHECK(generate(GraphFamily::kComplete, 5).edge_count() == 10);
  CHECK(generate(GraphFamily::kCycle, 6).edge_count() == 6);
  CHECK_THROWS_AS(generate(GraphFamily::kPath, 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("hypercube"), std::invalid_argument);
  for (auto f : {GraphFamily::kPath, GraphFamily::kCycle, GraphFamily::kComplete,
                 GraphFamily::kPathComplement, GraphFamily::kSpiderComplement,
                 GraphFamily::kRandomTree}) {
    CHECK(parse_family(family_name(f)) == f);
  }

  SUBCASE("random trees are deterministic per seed") {
    CHECK(random_tree(9, 42) == random_tree(9, 42));
    CHECK(is_tree(random_tree(9, 42)));
  }

  SUBCASE("spider complement with two branches is the 7-path complement") {
    const Graph s = spider_complement(2);
    const Graph p = cop7();
    // Spider 3-2-1-0-4-5-6 is the path; map path position i to spider vertex.
    const std::vector<Vertex> order{3, 2, 1, 0, 4, 5, 6};
    for (int i = 0; i < 7; ++i) {
      for (int j = i + 1; j < 7; ++j) CHECK(p.adjacent(i, j) == s.adjacent(order[i], order[j]));
    }
  }

  SUBCASE("spider complements are connected and co-connected") {
    for (int k = 2; k <= 6; ++k) {
      const Graph s = spider_complement(k);
      CHECK(s.vertex_count() == 3 * k + 1);
      CHECK(is_connected(s));
      CHECK(is_co_connected(s));
    }
  }
}

TEST_CASE("dot export") {
  const std::string dot = format_dot(path_graph(2), "P");
  CHECK(dot.find("graph P {") == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
}
