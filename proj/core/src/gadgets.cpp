#include <algorithm>
#include <map>
#include <stdexcept>

#include "disjoint_sets.hpp"
#include "mcts/sat_reduction.hpp"

namespace mcts {

namespace {

using Occ = OccurrenceGadget;

std::vector<Edge> occurrence_edges(Polarity polarity) {
  std::vector<Edge> e;
  for (int i = 1; i < 8; ++i) e.emplace_back(Occ::p(i), Occ::p(i + 1));
  e.emplace_back(Occ::p(3), Occ::p(6));
  e.emplace_back(Occ::kClause, Occ::p(3));
  e.emplace_back(Occ::kClause, Occ::p(6));
  e.emplace_back(Occ::kQ, polarity == Polarity::kPositive ? Occ::p(3) : Occ::p(6));
  e.emplace_back(Occ::kLeafF, Occ::p(1));
  e.emplace_back(Occ::kLeafT, Occ::p(8));
  return e;
}

}  // namespace

OccurrenceGadget build_occurrence_gadget(Polarity polarity) {
  OccurrenceGadget g;
  g.polarity = polarity;
  const auto edges = occurrence_edges(polarity);
  g.graph = Graph::from_edges(Occ::kVertexCount, edges);
  g.t_edge = Edge(Occ::kLeafT, Occ::p(8));
  g.f_edge = Edge(Occ::kLeafF, Occ::p(1));
  return g;
}

ReferenceClause build_reference_clause() {
  std::vector<Edge> edges{{ReferenceClause::kCentral, ReferenceClause::kPendant}};
  for (int slot = 0; slot < 3; ++slot) {
    for (const Edge& e : occurrence_edges(ReferenceClause::kPolarity[slot])) {
      edges.emplace_back(ReferenceClause::vertex(slot, e.u), ReferenceClause::vertex(slot, e.v));
    }
    edges.emplace_back(ReferenceClause::kCentral, ReferenceClause::vertex(slot, Occ::kClause));
  }
  ReferenceClause out;
  out.graph = Graph::from_edges(2 + 3 * Occ::kVertexCount, edges);
  return out;
}

GadgetGraph build_formula_graph(const CnfFormula& f) {
  check_formula(f);
  const int m = static_cast<int>(f.clauses.size());
  constexpr int kPerClause = 2 + 3 * Occ::kVertexCount;

  // Provisional ids: clause i owns [i * 38, (i + 1) * 38) laid out like the
  // reference clause. Junctions are then identified with union-find.
  auto provisional = [](int clause, int slot, int local) {
    return clause * kPerClause + ReferenceClause::vertex(slot, local);
  };
  detail::DisjointSets same(m * kPerClause);

  struct Occurrence {
    int clause;
    int slot;
  };
  std::map<int, std::vector<Occurrence>> occurrences;
  for (int i = 0; i < m; ++i) {
    for (int s = 0; s < 3; ++s) occurrences[f.clauses[i][s].variable].push_back({i, s});
  }
  struct Junction {
    int from_clause, from_slot, to_clause, variable;
  };
  std::vector<Junction> junctions;
  for (const auto& [x, occ] : occurrences) {
    const std::size_t len = occ.size();
    for (std::size_t j = 0; j < len; ++j) {
      const Occurrence a = occ[j];
      const Occurrence b = occ[(j + 1) % len];
      same.unite(provisional(a.clause, a.slot, Occ::p(8)), provisional(b.clause, b.slot, Occ::p(1)));
      same.unite(provisional(a.clause, a.slot, Occ::kLeafT),
                 provisional(b.clause, b.slot, Occ::kLeafF));
      junctions.push_back({a.clause, a.slot, b.clause, x});
    }
  }

  // Compact ids in order of first provisional appearance.
  std::vector<int> id(m * kPerClause, -1);
  int next = 0;
  for (int v = 0; v < m * kPerClause; ++v) {
    const int root = same.find(v);
    if (id[root] < 0) id[root] = next++;
    id[v] = id[root];
  }

  GadgetGraph out;
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    const Vertex central = id[i * kPerClause + ReferenceClause::kCentral];
    const Vertex pendant = id[i * kPerClause + ReferenceClause::kPendant];
    out.central_vertices.push_back(central);
    out.pendant_vertices.push_back(pendant);
    edges.emplace_back(central, pendant);
    std::array<Vertex, 3> clause_vertex{};
    std::array<std::array<Vertex, Occ::kVertexCount>, 3> occ_ids{};
    std::vector<Vertex> members{central, pendant};
    for (int s = 0; s < 3; ++s) {
      for (int local = 0; local < Occ::kVertexCount; ++local) {
        occ_ids[s][local] = id[provisional(i, s, local)];
        members.push_back(occ_ids[s][local]);
      }
      clause_vertex[s] = occ_ids[s][Occ::kClause];
      edges.emplace_back(central, clause_vertex[s]);
      const Polarity pol = f.clauses[i][s].positive ? Polarity::kPositive : Polarity::kNegative;
      for (const Edge& e : occurrence_edges(pol)) {
        edges.emplace_back(occ_ids[s][e.u], occ_ids[s][e.v]);
      }
    }
    std::sort(members.begin(), members.end());
    out.clause_vertices.push_back(clause_vertex);
    out.occurrence_vertices.push_back(occ_ids);
    out.clause_membership.push_back(std::move(members));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = Graph::from_edges(next, edges);

  for (const Junction& j : junctions) {
    const auto& ids = out.occurrence_vertices[j.from_clause][j.from_slot];
    LabelledEdge le;
    le.edge = Edge(ids[Occ::kLeafT], ids[Occ::p(8)]);
    le.leaf = ids[Occ::kLeafT];
    le.t_label = {j.from_clause, j.variable};
    le.f_label = {j.to_clause, j.variable};
    out.labelled_edges.push_back(le);
  }
  std::sort(out.labelled_edges.begin(), out.labelled_edges.end(),
            [](const LabelledEdge& a, const LabelledEdge& b) { return a.edge < b.edge; });

  if (!is_connected(out.graph)) {
    throw std::invalid_argument(
        "the formula splits into variable-disjoint parts; its gadget graph is disconnected");
  }
  return out;
}

}  // namespace mcts
