#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcts/graph.hpp"
#include "mcts/hypergraph.hpp"

namespace mcts {

// Which hyperedges are admissible.
//   kConnected:   G[E] connected      (connecting hypergraphs)
//   kCoConnected: G[E] co-connected   (co-connecting hypergraphs)
enum class CoverMode { kConnected, kCoConnected };

std::string_view mode_name(CoverMode mode);

// Cover every required pair by admissible hyperedges at minimum sum of
// (|E| - 2). Hyperedges stay inside `universe`, have |E| >= 2 and never
// contain both vertices of a forbidden pair.
//
// Required pairs must be pairs the admissibility condition can actually
// witness: non-edges of the host in kConnected mode, edges in kCoConnected
// mode. The universe may hold at most 64 vertices and there may be at most
// 256 required pairs.
struct CoverInstance {
  Graph host;
  CoverMode mode = CoverMode::kConnected;
  std::vector<Edge> required;
  std::vector<Edge> forbidden;
  std::vector<Vertex> universe;
  std::optional<int> upper_bound;
  // Additionally demand the dual property of every hyperedge: connected in
  // kCoConnected mode, co-connected in kConnected mode.
  bool require_dual_connectivity = false;
};

// Throws std::invalid_argument describing the first broken invariant.
void check_instance(const CoverInstance& instance);

// Optimal connecting hypergraph instance: required = all non-edges.
CoverInstance make_ochg_instance(const Graph& g);

// Checks a proposed cover against the instance's own semantics.
ValidationReport validate_cover(const CoverInstance& instance, const Hypergraph& cover);

struct SearchBudget {
  // Branch-and-bound nodes.
  std::uint64_t max_nodes = 20'000'000;
  // Vertex sets visited while generating candidate hyperedges.
  std::uint64_t max_enumerated = 200'000'000;
};

enum class CoverStatus { kOptimal, kBudgetExhausted, kInfeasible };

std::string_view status_name(CoverStatus status);

struct CoverStats {
  std::uint64_t enumerated = 0;  // connected vertex sets visited
  std::uint64_t candidates = 0;  // hyperedge candidates after pruning
  std::uint64_t nodes = 0;       // search nodes
};

struct CoverResult {
  CoverStatus status = CoverStatus::kInfeasible;
  // Best cover found. Present when status is kOptimal, and when the budget
  // ran out after some cover had been found.
  std::optional<int> cost;
  Hypergraph cover;
  CoverStats stats;
  std::string message;

  bool optimal() const noexcept { return status == CoverStatus::kOptimal; }
};

// Exact branch-and-bound; see cover.cpp for the candidate reduction.
CoverResult min_cost_cover(const CoverInstance& instance, const SearchBudget& budget = {});

}  // namespace mcts
