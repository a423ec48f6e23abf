#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcts/graph.hpp"

namespace mcts {

// A family of vertex sets. Each hyperedge is kept sorted and duplicate-free,
// the family is sorted lexicographically and repeated hyperedges are
// collapsed (the number collapsed is kept for diagnostics).
//
// The same value type carries both connecting hypergraphs (hyperedges induce
// connected subgraphs and jointly contain every non-adjacent pair) and
// co-connecting ones (co-connected hyperedges jointly containing every edge);
// which contract applies is decided by the validator used.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::vector<std::vector<Vertex>> hyperedges);

  const std::vector<std::vector<Vertex>>& hyperedges() const noexcept { return hyperedges_; }
  std::size_t size() const noexcept { return hyperedges_.size(); }
  bool empty() const noexcept { return hyperedges_.empty(); }
  int collapsed_duplicates() const noexcept { return collapsed_; }

  auto begin() const noexcept { return hyperedges_.begin(); }
  auto end() const noexcept { return hyperedges_.end(); }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.hyperedges_ == b.hyperedges_;
  }

 private:
  std::vector<std::vector<Vertex>> hyperedges_;
  int collapsed_ = 0;
};

// Sum over hyperedges of (|E| - 2).
int cost(const Hypergraph& h);

enum class ViolationKind {
  kTooSmall,          // |E| < 2
  kVertexOutOfRange,
  kNotConnected,      // G[E] disconnected
  kNotCoConnected,    // complement of G[E] disconnected
  kUncoveredPair,     // required pair in no hyperedge
  kOutsideUniverse,   // hyperedge leaves a cover instance's universe
  kForbiddenPair,     // hyperedge contains a forbidden pair
};

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<Vertex> hyperedge;  // offending hyperedge, when applicable
  std::pair<Vertex, Vertex> pair{-1, -1};  // for kUncoveredPair and kForbiddenPair

  std::string describe() const;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
  int cost = 0;
};

// Connecting hypergraph: every hyperedge has |E| >= 2 and induces a connected
// subgraph, and every non-adjacent pair lies in some hyperedge.
ValidationReport validate_connecting(const Graph& g, const Hypergraph& h);

// Co-connecting hypergraph: every hyperedge has |E| >= 2 and induces a
// co-connected subgraph, and every edge lies in some hyperedge.
ValidationReport validate_co_connecting(const Graph& g, const Hypergraph& h);

// ---- text format ----------------------------------------------------------

struct ParsedHypergraph {
  Hypergraph hypergraph;
  std::vector<std::string> warnings;
};

// One hyperedge per line as space-separated vertex ids; '#' comments.
// Vertex ids are range-checked against `vertex_count`.
ParsedHypergraph parse_hypergraph(std::istream& in, int vertex_count);
ParsedHypergraph parse_hypergraph(std::string_view text, int vertex_count);

std::string format_hypergraph(const Hypergraph& h);

}  // namespace mcts
