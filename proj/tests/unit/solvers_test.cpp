#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "mcts/conversions.hpp"
#include "mcts/solvers.hpp"
#include "oracles.hpp"

using namespace mcts;

namespace {

Graph cop7() { return complement(path_graph(7)); }

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

void check_report(const Graph& g, const SolveReport& r) {
  CHECK(r.lower_bound <= r.cost);
  if (r.optimal) CHECK(r.lower_bound == r.cost);
  CHECK(is_t_connected(g, r.transitions));
  const auto v = validate_connecting(g, r.hypergraph);
  CHECK(v.valid);
  CHECK(v.cost == r.cost);
  CHECK(static_cast<int>(r.transitions.size()) <= r.cost);
}

}  // namespace

TEST_CASE("tree_transition_set") {
  CHECK(tree_transition_set(path_graph(2)).empty());
  const Graph p4 = path_graph(4);
  CHECK(tree_transition_set(p4).size() == 2);
  CHECK(is_t_connected(p4, tree_transition_set(p4)));

  const TransitionSet s = tree_transition_set(star(5));
  CHECK(s.size() == 4);
  for (const Transition& t : s) CHECK(t.middle == 0);
  CHECK(is_t_connected(star(5), s));

  CHECK_THROWS_AS(tree_transition_set(cycle_graph(4)), std::invalid_argument);
  CHECK_THROWS_AS(tree_transition_set(Graph(1)), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph t = random_tree(2 + seed % 12, seed);
    const TransitionSet ts = tree_transition_set(t);
    CHECK(static_cast<int>(ts.size()) == t.vertex_count() - 2);
    CHECK(testing::oracle_is_t_connected(t, ts));
  }
}

TEST_CASE("tau") {
  CHECK(tau(cop7()) == 5);
  CHECK(tau(complete_graph(6)) == 0);
  CHECK(tau(spider_complement(3)) == 8);
  CHECK(tau(path_graph(3)) == 1);
  CHECK_THROWS_AS(tau(Graph(2)), std::invalid_argument);
  for (int k = 2; k <= 6; ++k) CHECK(tau(spider_complement(k)) == 3 * k - 1);
}

TEST_CASE("tau heuristic hypergraph") {
  CHECK(tau_heuristic_hypergraph(path_graph(3)) == Hypergraph({{0, 1, 2}}));
  CHECK(tau_heuristic_hypergraph(cop7()) == Hypergraph({{0, 1, 2, 3, 4, 5, 6}}));
  CHECK(tau_heuristic_hypergraph(complete_graph(4)).empty());

  testing::Rng rng(13);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const Graph g = testing::random_connected_graph(1 + i % 10, density(rng), rng);
    const Hypergraph h = tau_heuristic_hypergraph(g);
    const auto r = validate_connecting(g, h);
    CHECK(r.valid);
    CHECK(r.cost == tau(g));
  }
}

TEST_CASE("lower_bound") {
  CHECK(lower_bound(cop7()) == 4);
  CHECK(lower_bound(random_tree(6, 1)) == 4);
  CHECK(lower_bound(spider_complement(3)) == 6);
  CHECK(lower_bound(complete_graph(4)) == 0);
  CHECK(lower_bound(cycle_graph(4)) == 2);
  CHECK(lower_bound(path_graph(5)) == 3);
}

TEST_CASE("exact_min_transitions") {
  CHECK(exact_min_transitions(complete_graph(4)).empty());
  CHECK(exact_min_transitions(cop7()).size() == 4);
  CHECK(is_t_connected(cop7(), exact_min_transitions(cop7())));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph t = random_tree(2 + seed % 6, seed);
    CHECK(static_cast<int>(exact_min_transitions(t).size()) == t.vertex_count() - 2);
  }
  CHECK_THROWS_AS(exact_min_transitions(cop7(), 10), SearchLimitExceeded);
  CHECK_THROWS_AS(exact_min_transitions(Graph(2)), std::invalid_argument);

  SUBCASE("agrees with plain subset enumeration") {
    testing::Rng rng(8);
    for (int i = 0; i < 60; ++i) {
      const Graph g = testing::random_connected_graph(2 + i % 4, 0.5, rng);
      CHECK(static_cast<int>(exact_min_transitions(g).size()) == testing::oracle_min_transitions(g));
    }
  }
}

TEST_CASE("solve") {
  SUBCASE("complete graphs need nothing") {
    const SolveReport r = solve(complete_graph(5));
    CHECK(r.cost == 0);
    CHECK(r.optimal);
    CHECK(r.transitions.empty());
  }
  SUBCASE("trees take the tree construction") {
    const Graph t = random_tree(9, 4);
    const SolveReport r = solve(t);
    CHECK(r.cost == 7);
    CHECK(r.optimal);
    CHECK(r.method == SolveMethod::kTree);
    check_report(t, r);
  }
  SUBCASE("cut vertex") {
    const Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    const SolveReport r = solve(g);
    CHECK(r.method == SolveMethod::kCutVertex);
    CHECK(r.cost == 3);
    CHECK(r.optimal);
    check_report(g, r);
  }
  SUBCASE("7-path complement") {
    const SolveReport h = solve(cop7(), SolveMode::kHeuristic);
    CHECK(h.cost == 5);
    CHECK_FALSE(h.optimal);
    check_report(cop7(), h);
    const SolveReport e = solve(cop7(), SolveMode::kExact);
    CHECK(e.cost == 4);
    CHECK(e.lower_bound == 4);
    CHECK(e.optimal);
    CHECK(e.transitions.size() == 4);
    check_report(cop7(), e);
  }
  SUBCASE("spider complement") {
    const Graph s = spider_complement(3);
    const SolveReport h = solve(s, SolveMode::kHeuristic);
    CHECK(h.cost == 8);
    CHECK(h.lower_bound == 6);
    CHECK_FALSE(h.optimal);
    const SolveReport e = solve(s, SolveMode::kExact);
    CHECK(e.cost == 6);
    CHECK(e.optimal);
    check_report(s, e);
  }
  SUBCASE("exhausted budgets degrade to the heuristic answer") {
    const SolveReport r = solve(spider_complement(4), SolveMode::kExact, SearchBudget{1, 1});
    CHECK_FALSE(r.optimal);
    CHECK(r.cost == 11);
    CHECK_FALSE(r.note.empty());
    check_report(spider_complement(4), r);
  }
  SUBCASE("disconnected input") {
    CHECK_THROWS_AS(solve(Graph(3)), std::invalid_argument);
  }
  SUBCASE("report invariants on random graphs") {
    testing::Rng rng(17);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 80; ++i) {
      const Graph g = testing::random_connected_graph(1 + i % 9, density(rng), rng);
      for (auto mode : {SolveMode::kAuto, SolveMode::kHeuristic, SolveMode::kExact}) {
        check_report(g, solve(g, mode));
      }
    }
  }
  SUBCASE("mode names") {
    CHECK(parse_solve_mode("exact") == SolveMode::kExact);
    CHECK_THROWS_AS(parse_solve_mode("fast"), std::invalid_argument);
    CHECK(method_name(SolveMethod::kCutVertex) == "cut_vertex");
  }
}

TEST_CASE("optimum laws on small graphs") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::connected_graphs_up_to_iso(n)) {
      const int exact = static_cast<int>(exact_min_transitions(g).size());
      const SolveReport r = solve(g, SolveMode::kExact);
      CHECK(r.optimal);
      CHECK(r.cost == exact);
      CHECK(lower_bound(g) <= exact);
      CHECK(exact <= tau(g));
      CHECK(2 * tau(g) <= 3 * exact);
      if (n >= 3 && !cut_vertices(g).empty()) CHECK(exact == n - 2);
    }
  }
}
