#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mcts/cover.hpp"
#include "mcts/graph.hpp"
#include "mcts/hypergraph.hpp"
#include "mcts/transitions.hpp"

// Slow, independent reference implementations used to cross-check the
// library. None of them shares code with the algorithms they check beyond
// the Graph container itself.
namespace mcts::testing {

using Rng = std::mt19937_64;

// Plain adjacency matrix copy of g, so the oracles never call library
// algorithms.
std::vector<std::vector<char>> adjacency_matrix(const Graph& g);

// Breadth-first search over directed edge states (previous, current): from
// (p, c) the walk may step to (c, p) or to (c, x) when p c x is a permitted
// transition. A vertex pair is connected iff some state at one end reaches a
// state at the other.
bool oracle_is_t_connected(const Graph& g, const TransitionSet& t);

// Minimum cost cover by exhaustive search: every admissible vertex subset is
// a possible hyperedge; depth-first search with increasing cost cap, always
// branching on the first uncovered required pair. Universe must be small.
std::optional<int> oracle_min_cover_cost(const CoverInstance& instance, int max_cost = 64);

// Smallest k for which some k-subset of all transitions is t-connected,
// checked with oracle_is_t_connected. Tiny graphs only.
int oracle_min_transitions(const Graph& g);

// All connected graphs on n vertices, one per isomorphism class (n <= 7).
std::vector<Graph> connected_graphs_up_to_iso(int n);

Graph random_connected_graph(int n, double p, Rng& rng);
// Two random connected blocks sharing one vertex (n >= 3).
Graph random_cut_vertex_graph(int n, Rng& rng);
// Each transition of g kept independently with probability p.
TransitionSet random_transition_subset(const Graph& g, double p, Rng& rng);
// A random t-connected transition set: random order, added until connected,
// then a few extra ones.
TransitionSet random_connecting_transitions(const Graph& g, Rng& rng);
// A random valid connecting hypergraph of a connected, non-complete g.
Hypergraph random_connecting_hypergraph(const Graph& g, Rng& rng);

}  // namespace mcts::testing
