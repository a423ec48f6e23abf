#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "mcts/sat_reduction.hpp"

namespace mcts {

namespace {

using Occ = OccurrenceGadget;

Polarity polarity_of(const Literal& l) {
  return l.positive ? Polarity::kPositive : Polarity::kNegative;
}

bool incidence_graph_is_planar(const CnfFormula& f) {
  using Incidence = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const int m = static_cast<int>(f.clauses.size());
  Incidence g(f.variable_count + m);
  for (int i = 0; i < m; ++i) {
    for (const Literal& l : f.clauses[i]) boost::add_edge(l.variable - 1, f.variable_count + i, g);
  }
  return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace

Configuration clause_configuration(const Clause& clause, const Assignment& a) {
  std::array<Symbol, 3> slots{};
  for (int s = 0; s < 3; ++s) slots[s] = literal_value(clause[s], a) ? Symbol::kS : Symbol::kU;
  return Configuration(slots);
}

AssignmentCover assignment_to_cover(const CnfFormula& f, const Assignment& a,
                                    const SearchBudget& budget) {
  check_formula(f);
  if (static_cast<int>(a.size()) != f.variable_count) {
    throw std::invalid_argument("assignment has " + std::to_string(a.size()) + " values for " +
                                std::to_string(f.variable_count) + " variables");
  }
  const GadgetGraph gadget = build_formula_graph(f);
  const int m = static_cast<int>(f.clauses.size());

  std::vector<Configuration> local(m);
  std::map<Configuration, std::future<CoverResult>> pending;
  for (int i = 0; i < m; ++i) {
    local[i] = clause_configuration(f.clauses[i], a);
    const Configuration canon = local[i].canonical();
    if (!pending.count(canon)) {
      pending.emplace(canon, std::async(std::launch::async, [canon, budget] {
                        return configuration_min_cost(canon, budget);
                      }));
    }
  }
  std::map<Configuration, CoverResult> witness;
  for (auto& [config, future] : pending) {
    CoverResult r = future.get();
    if (!r.optimal()) {
      throw std::runtime_error("no optimal witness for configuration " + config.to_string() + ": " +
                               std::string(status_name(r.status)));
    }
    witness.emplace(config, std::move(r));
  }

  AssignmentCover out;
  std::vector<std::vector<Vertex>> all;
  for (int i = 0; i < m; ++i) {
    const Configuration canon = local[i].canonical();
    const CoverResult& w = witness.at(canon);

    // Reference slot k carries canon's k-th symbol; send it to a real slot
    // with the same symbol, mirroring the gadget when the polarities differ.
    std::array<int, 3> target{};
    std::array<bool, 3> used{};
    for (int k = 0; k < 3; ++k) {
      for (int s = 0; s < 3; ++s) {
        if (!used[s] && local[i].slots()[s] == canon.slots()[k]) {
          target[k] = s;
          used[s] = true;
          break;
        }
      }
    }
    std::vector<Vertex> map(2 + 3 * Occ::kVertexCount);
    map[ReferenceClause::kCentral] = gadget.central_vertices[i];
    map[ReferenceClause::kPendant] = gadget.pendant_vertices[i];
    for (int k = 0; k < 3; ++k) {
      const int s = target[k];
      const bool flip = ReferenceClause::kPolarity[k] != polarity_of(f.clauses[i][s]);
      for (int v = 0; v < Occ::kVertexCount; ++v) {
        map[ReferenceClause::vertex(k, v)] = gadget.occurrence_vertices[i][s][flip ? Occ::mirror(v) : v];
      }
    }
    std::vector<std::vector<Vertex>> placed;
    for (const auto& e : w.cover) {
      std::vector<Vertex> image;
      for (Vertex v : e) image.push_back(map[v]);
      std::sort(image.begin(), image.end());
      placed.push_back(image);
      all.push_back(std::move(image));
    }
    out.clause_configurations.push_back(canon);
    out.clause_costs.push_back(*w.cost);
    out.clause_hyperedges.push_back(std::move(placed));
  }
  out.cover = Hypergraph(std::move(all));
  out.cost = cost(out.cover);
  return out;
}

ReductionReport verify_reduction(const CnfFormula& f, const Assignment& a,
                                 const SearchBudget& budget) {
  ReductionReport r;
  const GadgetGraph gadget = build_formula_graph(f);
  const int m = static_cast<int>(f.clauses.size());
  r.clause_count = m;
  r.vertex_count = gadget.graph.vertex_count();
  r.edge_count = static_cast<int>(gadget.graph.edge_count());
  r.counts_match = r.vertex_count == 32 * m && r.edge_count == 40 * m;
  r.connected = is_connected(gadget.graph);
  r.co_connected = is_co_connected(gadget.graph);
  r.satisfied = satisfies(f, a);
  r.target = 25 * m;

  r.witness = assignment_to_cover(f, a, budget);
  r.validation = validate_co_connecting(gadget.graph, r.witness.cover);

  int sum = 0;
  r.cost_decomposes = true;
  for (int i = 0; i < m; ++i) {
    const Clause& c = f.clauses[i];
    const bool clause_true =
        literal_value(c[0], a) || literal_value(c[1], a) || literal_value(c[2], a);
    sum += r.witness.clause_costs[i];
    if (r.witness.clause_costs[i] != (clause_true ? 25 : 26)) r.cost_decomposes = false;
  }
  if (sum != r.witness.cost) r.cost_decomposes = false;
  r.cost_matches = (r.witness.cost == r.target) == r.satisfied;

  r.hyperedges_local = std::all_of(r.witness.cover.begin(), r.witness.cover.end(), [&](const auto& e) {
    return std::any_of(gadget.clause_membership.begin(), gadget.clause_membership.end(),
                       [&](const std::vector<Vertex>& members) {
                         return std::includes(members.begin(), members.end(), e.begin(), e.end());
                       });
  });

  if (!r.satisfied) {
    r.notes.push_back("the assignment falsifies the formula; the cover costs more than 25m");
  }
  if (incidence_graph_is_planar(f)) {
    r.notes.push_back(
        "the variable-clause incidence graph is planar, so the gadget graph can be drawn planar "
        "(planarity of the gadget graph itself is not checked)");
  }
  return r;
}

}  // namespace mcts
