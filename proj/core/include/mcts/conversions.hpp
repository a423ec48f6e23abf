#pragma once

#include "mcts/graph.hpp"
#include "mcts/hypergraph.hpp"
#include "mcts/transitions.hpp"

namespace mcts {

// Groups the transitions into classes of the transitive closure of "shares an
// edge" and returns the vertex set of each class. The result is a connecting
// hypergraph of cost at most |t|. Throws std::invalid_argument if g is not
// t-connected.
Hypergraph transitions_to_hypergraph(const Graph& g, const TransitionSet& t);

// For each hyperedge, connects a spanning tree of G[E] with |E| - 2
// transitions (see tree_transition_set) and returns the union, of size at
// most cost(h). Throws std::invalid_argument if h is not a valid connecting
// hypergraph of g.
TransitionSet hypergraph_to_transitions(const Graph& g, const Hypergraph& h);

}  // namespace mcts
