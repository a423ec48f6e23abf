#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mcts/cover.hpp"
#include "mcts/graph.hpp"
#include "mcts/hypergraph.hpp"
#include "mcts/transitions.hpp"

namespace mcts {

// For a tree with n >= 2 vertices, let f(v) be the lowest-id neighbor of v.
// Returns {u v f(v) : v in V, u in N(v) - f(v)}, which has n - 2 transitions
// and makes the tree t-connected. Throws std::invalid_argument otherwise.
TransitionSet tree_transition_set(const Graph& g);

// Sum over co-connected components C with |C| >= 2 of |C| - 2 when G[C] is
// connected and |C| - 1 otherwise. Throws std::invalid_argument if g is
// disconnected.
int tau(const Graph& g);

// One hyperedge per co-connected component C with |C| >= 2: C itself when
// G[C] is connected, otherwise C plus the lowest-id vertex outside C (every
// such vertex is adjacent to all of C). Cost equals tau(g).
Hypergraph tau_heuristic_hypergraph(const Graph& g);

// max(ceil(2 tau / 3), n - 2 if g has a cut vertex, 1 if g is not complete).
int lower_bound(const Graph& g);

enum class SolveMode { kAuto, kHeuristic, kExact };
enum class SolveMethod { kTree, kCutVertex, kHeuristic, kExact, kCertified };

std::string_view mode_name(SolveMode mode);
std::string_view method_name(SolveMethod method);
// Throws std::invalid_argument on unknown names.
SolveMode parse_solve_mode(std::string_view name);

struct SolveReport {
  TransitionSet transitions;
  Hypergraph hypergraph;
  int cost = 0;  // cost(hypergraph); transitions.size() <= cost
  int lower_bound = 0;
  bool optimal = false;
  SolveMethod method = SolveMethod::kHeuristic;
  std::string note;  // why an exact run fell back, if it did
};

// kAuto:      empty set for complete graphs, {V} for graphs with a cut vertex,
//             the tau hypergraph otherwise.
// kHeuristic: always the tau hypergraph.
// kExact:     as kAuto, then an exact cover search when optimality is not
//             yet certified. Budget exhaustion keeps the best answer found
//             with optimal = false.
// Throws std::invalid_argument if g is disconnected.
SolveReport solve(const Graph& g, SolveMode mode = SolveMode::kAuto,
                  const SearchBudget& budget = {});

class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Minimum connecting transition set by exhaustive search over subsets of
// increasing size. `max_subsets` caps the subsets tested; exceeding it throws
// SearchLimitExceeded. Meant for graphs with at most about 7 vertices.
TransitionSet exact_min_transitions(const Graph& g, std::uint64_t max_subsets = 50'000'000);

}  // namespace mcts
