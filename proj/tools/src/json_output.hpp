#pragma once

#include <json.hpp>

#include "mcts/hypergraph.hpp"
#include "mcts/sat_reduction.hpp"
#include "mcts/solvers.hpp"
#include "mcts/transitions.hpp"

namespace mcts::cli {

using Json = nlohmann::ordered_json;

// Every document starts with {"schema": 1}.
Json document();

Json transitions_json(const TransitionSet& t);
Json hyperedges_json(const Hypergraph& h);
Json graph_json(const Graph& g);

// Keys in order: cost, lower_bound, optimal, method, transitions, hyperedges.
Json solve_json(const SolveReport& r);
Json validation_json(const ValidationReport& r);
Json labels_json(const GadgetGraph& g);
Json table_json(const std::vector<TableEntry>& table);
Json reduction_json(const ReductionReport& r);

}  // namespace mcts::cli
