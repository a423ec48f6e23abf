#include "mcts/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mcts/conversions.hpp"

namespace mcts {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(what) + ": graph is disconnected");
}

}  // namespace

TransitionSet tree_transition_set(const Graph& g) {
  if (g.vertex_count() < 2 || !is_tree(g)) {
    throw std::invalid_argument("tree_transition_set: not a tree on at least 2 vertices");
  }
  std::vector<Transition> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    const Vertex f = nb.front();
    for (std::size_t i = 1; i < nb.size(); ++i) out.emplace_back(nb[i], v, f);
  }
  return TransitionSet(std::move(out));
}

int tau(const Graph& g) {
  require_connected(g, "tau");
  int total = 0;
  for (const auto& c : co_connected_components(g).blocks) {
    const int size = static_cast<int>(c.size());
    if (size < 2) continue;
    total += induces_connected(g, c) ? size - 2 : size - 1;
  }
  return total;
}

Hypergraph tau_heuristic_hypergraph(const Graph& g) {
  require_connected(g, "tau_heuristic_hypergraph");
  std::vector<std::vector<Vertex>> edges;
  for (const auto& c : co_connected_components(g).blocks) {
    if (c.size() < 2) continue;
    std::vector<Vertex> e(c.begin(), c.end());
    if (!induces_connected(g, e)) {
      std::vector<char> inside(g.vertex_count(), 0);
      for (Vertex v : e) inside[v] = 1;
      const auto it = std::find(inside.begin(), inside.end(), 0);
      e.push_back(static_cast<Vertex>(it - inside.begin()));
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(std::move(edges));
}

int lower_bound(const Graph& g) {
  require_connected(g, "lower_bound");
  int bound = (2 * tau(g) + 2) / 3;
  if (g.vertex_count() >= 3 && !cut_vertices(g).empty()) {
    bound = std::max(bound, g.vertex_count() - 2);
  }
  if (!g.is_complete()) bound = std::max(bound, 1);
  return bound;
}

std::string_view mode_name(SolveMode mode) {
  switch (mode) {
    case SolveMode::kAuto: return "auto";
    case SolveMode::kHeuristic: return "heuristic";
    case SolveMode::kExact: return "exact";
  }
  return "unknown";
}

std::string_view method_name(SolveMethod method) {
  switch (method) {
    case SolveMethod::kTree: return "tree";
    case SolveMethod::kCutVertex: return "cut_vertex";
    case SolveMethod::kHeuristic: return "heuristic";
    case SolveMethod::kExact: return "exact";
    case SolveMethod::kCertified: return "certified";
  }
  return "unknown";
}

SolveMode parse_solve_mode(std::string_view name) {
  for (SolveMode m : {SolveMode::kAuto, SolveMode::kHeuristic, SolveMode::kExact}) {
    if (mode_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown solve mode '" + std::string(name) + "'");
}

namespace {

SolveReport from_hypergraph(const Graph& g, Hypergraph h, int bound, SolveMethod method) {
  SolveReport r;
  r.transitions = hypergraph_to_transitions(g, h);
  r.cost = cost(h);
  r.hypergraph = std::move(h);
  r.lower_bound = bound;
  r.optimal = r.cost == bound;
  r.method = method;
  return r;
}

SolveReport heuristic(const Graph& g, int bound) {
  SolveReport r = from_hypergraph(g, tau_heuristic_hypergraph(g), bound, SolveMethod::kHeuristic);
  if (r.optimal) r.method = SolveMethod::kCertified;
  return r;
}

void run_exact(const Graph& g, SolveReport& report, const SearchBudget& budget) {
  CoverInstance instance = make_ochg_instance(g);
  if (instance.universe.size() > 64 || instance.required.size() > 256) {
    report.note = "graph too large for the exact search; heuristic answer kept";
    return;
  }
  instance.upper_bound = report.cost;
  const CoverResult result = min_cost_cover(instance, budget);
  if (result.optimal()) {
    // Nothing at or below the heuristic cost would have made the search
    // infeasible, so an optimal status always carries a cover here.
    SolveReport exact = from_hypergraph(g, result.cover, *result.cost, SolveMethod::kExact);
    exact.optimal = true;
    report = std::move(exact);
    return;
  }
  if (result.status == CoverStatus::kBudgetExhausted && result.cost && *result.cost < report.cost) {
    const int bound = report.lower_bound;
    report = from_hypergraph(g, result.cover, bound, SolveMethod::kExact);
  }
  report.note = result.message.empty() ? std::string(status_name(result.status)) : result.message;
}

}  // namespace

SolveReport solve(const Graph& g, SolveMode mode, const SearchBudget& budget) {
  require_connected(g, "solve");
  if (g.is_complete()) {
    SolveReport r;
    r.optimal = true;
    r.method = SolveMethod::kCertified;
    return r;
  }
  const int bound = lower_bound(g);
  const int n = g.vertex_count();
  if (mode != SolveMode::kHeuristic && !cut_vertices(g).empty()) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (is_tree(g)) {
      SolveReport r;
      r.transitions = tree_transition_set(g);
      r.hypergraph = Hypergraph({all});
      r.cost = n - 2;
      r.lower_bound = n - 2;
      r.optimal = true;
      r.method = SolveMethod::kTree;
      return r;
    }
    return from_hypergraph(g, Hypergraph({all}), bound, SolveMethod::kCutVertex);
  }
  SolveReport report = heuristic(g, bound);
  if (mode == SolveMode::kExact && !report.optimal) run_exact(g, report, budget);
  return report;
}

}  // namespace mcts
