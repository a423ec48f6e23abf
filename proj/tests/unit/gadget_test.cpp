#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <set>

#include "mcts/sat_reduction.hpp"

using namespace mcts;

namespace {

using Occ = OccurrenceGadget;

CnfFormula two_clauses() { return parse_dimacs("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"); }

CnfFormula four_clauses() {
  return parse_dimacs("p cnf 4 4\n1 -2 3 0\n-1 2 4 0\n-3 -4 1 0\n2 -1 -4 0\n");
}

int leaves(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) count += g.degree(v) == 1;
  return count;
}

void check_gadget_invariants(const CnfFormula& f) {
  const GadgetGraph gg = build_formula_graph(f);
  const int m = static_cast<int>(f.clauses.size());
  const Graph& g = gg.graph;
  CHECK(g.vertex_count() == 32 * m);
  CHECK(static_cast<int>(g.edge_count()) == 40 * m);
  CHECK(is_connected(g));
  CHECK(is_co_connected(g));
  for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) <= 5);

  REQUIRE(static_cast<int>(gg.labelled_edges.size()) == 3 * m);
  std::set<std::pair<int, int>> t_labels;
  std::set<std::pair<int, int>> f_labels;
  for (const LabelledEdge& e : gg.labelled_edges) {
    CHECK(g.adjacent(e.edge.u, e.edge.v));
    CHECK(g.degree(e.leaf) == 1);
    CHECK((e.leaf == e.edge.u || e.leaf == e.edge.v));
    CHECK(e.t_label.second == e.f_label.second);
    CHECK(e.t_label.first != e.f_label.first);
    t_labels.insert(e.t_label);
    f_labels.insert(e.f_label);
  }
  CHECK(static_cast<int>(t_labels.size()) == 3 * m);
  CHECK(static_cast<int>(f_labels.size()) == 3 * m);
  for (int i = 0; i < m; ++i) {
    for (const Literal& l : f.clauses[i]) {
      CHECK(t_labels.count({i, l.variable}));
      CHECK(f_labels.count({i, l.variable}));
    }
  }

  int central_degree_four = 0;
  for (Vertex c : gg.central_vertices) central_degree_four += g.degree(c) == 4;
  CHECK(central_degree_four == m);

  // Each clause gadget is 38 vertices and induces a copy of the reference clause
  // gadget (up to the mirror on negative slots).
  const ReferenceClause ref = build_reference_clause();
  for (int i = 0; i < m; ++i) {
    CHECK(gg.clause_membership[i].size() == 38);
    const Graph induced = g.induced(gg.clause_membership[i]);
    CHECK(induced.edge_count() == ref.graph.edge_count());
    for (int s = 0; s < 3; ++s) {
      const auto& ids = gg.occurrence_vertices[i][s];
      CHECK(g.adjacent(gg.central_vertices[i], ids[Occ::kClause]));
      CHECK(ids[Occ::kClause] == gg.clause_vertices[i][s]);
      const Vertex q_anchor = f.clauses[i][s].positive ? ids[Occ::p(3)] : ids[Occ::p(6)];
      CHECK(g.adjacent(ids[Occ::kQ], q_anchor));
    }
  }
}

}  // namespace

TEST_CASE("occurrence gadget") {
  const OccurrenceGadget pos = build_occurrence_gadget(Polarity::kPositive);
  const OccurrenceGadget neg = build_occurrence_gadget(Polarity::kNegative);
  CHECK(pos.graph.vertex_count() == 12);
  CHECK(pos.graph.edge_count() == 13);
  CHECK(leaves(pos.graph) == 3);
  CHECK(pos.graph.degree(Occ::kLeafF) == 1);
  CHECK(pos.graph.degree(Occ::kLeafT) == 1);
  CHECK(pos.graph.degree(Occ::kQ) == 1);
  CHECK(pos.graph.degree(Occ::kClause) == 2);
  CHECK(pos.graph.adjacent(Occ::kQ, Occ::p(3)));
  CHECK(neg.graph.adjacent(Occ::kQ, Occ::p(6)));
  CHECK(pos.t_edge == Edge(Occ::kLeafT, Occ::p(8)));
  CHECK(pos.f_edge == Edge(Occ::kLeafF, Occ::p(1)));

  // The mirror is an isomorphism from the positive to the negative gadget
  // exchanging the two labelled edges.
  for (const Edge& e : pos.graph.edges()) {
    CHECK(neg.graph.adjacent(Occ::mirror(e.u), Occ::mirror(e.v)));
  }
  CHECK(Edge(Occ::mirror(pos.t_edge.u), Occ::mirror(pos.t_edge.v)) == neg.f_edge);
}

TEST_CASE("reference clause") {
  const ReferenceClause ref = build_reference_clause();
  CHECK(ref.graph.vertex_count() == 38);
  CHECK(ref.graph.edge_count() == 43);
  CHECK(ref.graph.degree(ReferenceClause::kCentral) == 4);
  CHECK(ref.graph.degree(ReferenceClause::kPendant) == 1);
}

TEST_CASE("formula graph") {
  const GadgetGraph gg = build_formula_graph(two_clauses());
  CHECK(gg.graph.vertex_count() == 64);
  CHECK(gg.graph.edge_count() == 80);
  check_gadget_invariants(two_clauses());
  check_gadget_invariants(four_clauses());
  check_gadget_invariants(parse_dimacs("p cnf 3 3\n1 2 3 0\n-1 -2 -3 0\n1 -2 3 0\n"));

  SUBCASE("clause gadgets share two vertices per junction") {
    const auto& a = gg.clause_membership[0];
    const auto& b = gg.clause_membership[1];
    std::vector<Vertex> shared;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
    CHECK(shared.size() == 12);  // 3 variables x 2 junctions x 2 vertices
  }

  SUBCASE("junction local picture") {
    // Path v0 v1 v2 v4 v5 with pendant v3 on v2, labels on v2 v3: v2 is the
    // shared p8 = p1 vertex, v3 the shared leaf.
    for (const LabelledEdge& e : gg.labelled_edges) {
      const Vertex leaf = e.leaf;
      const Vertex hub = e.edge.u == leaf ? e.edge.v : e.edge.u;
      CHECK(gg.graph.degree(hub) == 3);
      int path_neighbors = 0;
      for (Vertex x : gg.graph.neighbors(hub)) {
        if (x != leaf) path_neighbors += gg.graph.degree(x) == 2;
      }
      CHECK(path_neighbors == 2);
    }
  }

  SUBCASE("disconnected formulas are rejected") {
    const CnfFormula split =
        parse_dimacs("p cnf 6 4\n1 2 3 0\n-1 -2 -3 0\n4 5 6 0\n-4 -5 -6 0\n");
    CHECK_THROWS_AS(build_formula_graph(split), std::invalid_argument);
  }
}
