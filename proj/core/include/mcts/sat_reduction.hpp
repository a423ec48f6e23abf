#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcts/cnf.hpp"
#include "mcts/cover.hpp"
#include "mcts/graph.hpp"
#include "mcts/hypergraph.hpp"

namespace mcts {

enum class Polarity { kPositive, kNegative };

// The 12-vertex fragment g(x, c) for one literal occurrence:
//   path p1 .. p8, chord p3 p6,
//   clause vertex c adjacent to p3 and p6,
//   pendant q on p3 (positive) or on p6 (negative),
//   leaf lF on p1 (the F-labelled edge) and leaf lT on p8 (the T-labelled edge).
struct OccurrenceGadget {
  static constexpr int kVertexCount = 12;
  static constexpr int kQ = 8;
  static constexpr int kClause = 9;
  static constexpr int kLeafF = 10;
  static constexpr int kLeafT = 11;
  // Vertex id of p_i, 1 <= i <= 8.
  static constexpr int p(int i) { return i - 1; }
  // The path reversal p_i <-> p_{9-i}, lF <-> lT. It maps the positive
  // gadget onto the negative one and swaps the two labelled edges.
  static constexpr int mirror(int v) {
    if (v < 8) return 7 - v;
    if (v == kLeafF) return kLeafT;
    if (v == kLeafT) return kLeafF;
    return v;
  }

  Polarity polarity = Polarity::kPositive;
  Graph graph;
  Edge t_edge;  // lT p8
  Edge f_edge;  // lF p1
};

OccurrenceGadget build_occurrence_gadget(Polarity polarity);

// A labelled edge of the formula graph. Each one is the junction between two
// consecutive occurrences of the same variable and carries the T label of
// the earlier occurrence's clause and the F label of the later one's.
// Clause indices are 0-based positions in the formula; variables are the
// formula's 1-based ids.
struct LabelledEdge {
  Edge edge;
  Vertex leaf = 0;                  // the degree-1 endpoint
  std::pair<int, int> t_label;      // (clause, variable)
  std::pair<int, int> f_label;      // (clause, variable)
};

struct GadgetGraph {
  Graph graph;
  // Per clause, the clause vertex of each of its three occurrence gadgets.
  std::vector<std::array<Vertex, 3>> clause_vertices;
  // Per clause, the central vertex adjacent to the three clause vertices.
  std::vector<Vertex> central_vertices;
  // Per clause, the degree-1 vertex hanging off the central vertex.
  std::vector<Vertex> pendant_vertices;
  std::vector<LabelledEdge> labelled_edges;
  // Per clause, the sorted vertex set of its clause gadget (38 vertices).
  std::vector<std::vector<Vertex>> clause_membership;
  // Per clause and slot, the image of each occurrence gadget vertex.
  std::vector<std::array<std::array<Vertex, OccurrenceGadget::kVertexCount>, 3>> occurrence_vertices;
};

// Three occurrence gadgets per clause plus a central vertex and its pendant;
// consecutive occurrences of a variable (clauses in ascending order, taken
// cyclically) share their junction: p8 of one is p1 of the next and lT of
// one is lF of the next. Throws std::invalid_argument for an invalid formula
// or one whose graph would be disconnected.
GadgetGraph build_formula_graph(const CnfFormula& f);

// ---- configurations --------------------------------------------------------

// What a clause-local cover does with the two labelled edges of one
// occurrence: B covers both, U covers only the side the literal does not
// satisfy, S covers only the side it satisfies, N covers neither. The
// satisfying side is T for a positive occurrence and F for a negative one.
enum class Symbol { kB, kU, kS, kN };

char symbol_char(Symbol s);

class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::array<Symbol, 3> slots) : slots_(slots) {}

  // Three characters from "BUSN", any order. Throws std::invalid_argument.
  static Configuration parse(std::string_view text);

  const std::array<Symbol, 3>& slots() const noexcept { return slots_; }
  // Slots sorted B < U < S < N.
  Configuration canonical() const;
  bool is_canonical() const { return canonical() == *this; }
  std::string to_string() const;

  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::array<Symbol, 3> slots_{Symbol::kN, Symbol::kN, Symbol::kN};
};

// The 20 canonical configurations in ascending order.
std::vector<Configuration> all_configurations();

enum class Semantics {
  kExact,    // labelled edges outside the configuration must stay uncovered
  kAtLeast,  // labelled edges outside the configuration are unconstrained
};

struct ConfigurationOptions {
  Semantics semantics = Semantics::kExact;
  bool require_dual_connectivity = false;
};

// The clause gadget of the reference clause (x or not y or not z): slot 0 is
// a positive occurrence, slots 1 and 2 negative ones. Its 38 vertices are the
// central vertex 0, its pendant 1, then 12 per slot in OccurrenceGadget order.
struct ReferenceClause {
  static constexpr int kCentral = 0;
  static constexpr int kPendant = 1;
  static constexpr std::array<Polarity, 3> kPolarity = {Polarity::kPositive, Polarity::kNegative,
                                                        Polarity::kNegative};
  static constexpr int vertex(int slot, int local) {
    return 2 + slot * OccurrenceGadget::kVertexCount + local;
  }

  Graph graph;
};

ReferenceClause build_reference_clause();

// Co-connected cover instance on the reference clause gadget: every
// unlabelled edge is required, labelled edges follow the configuration slot
// by slot.
CoverInstance configuration_instance(const Configuration& config,
                                     const ConfigurationOptions& options = {});

CoverResult configuration_min_cost(const Configuration& config, const SearchBudget& budget = {},
                                   const ConfigurationOptions& options = {});

struct TableEntry {
  Configuration config;
  CoverResult result;
};

// All 20 canonical configurations, solved concurrently, in ascending order.
std::vector<TableEntry> configuration_table(const SearchBudget& budget = {},
                                            const ConfigurationOptions& options = {});

// ---- assignments -----------------------------------------------------------

// The configuration an assignment induces on a clause, slot by slot: S for a
// true literal, U for a false one.
Configuration clause_configuration(const Clause& clause, const Assignment& a);

struct AssignmentCover {
  Hypergraph cover;
  std::vector<Configuration> clause_configurations;  // canonical
  std::vector<int> clause_costs;
  int cost = 0;
  // Per clause, the hyperedges its local cover contributes.
  std::vector<std::vector<std::vector<Vertex>>> clause_hyperedges;
};

// Places, in every clause gadget, an optimal witness for the configuration
// the assignment induces. Throws std::invalid_argument for an assignment of
// the wrong length and std::runtime_error if a witness search runs out of
// budget.
AssignmentCover assignment_to_cover(const CnfFormula& f, const Assignment& a,
                                    const SearchBudget& budget = {});

struct ReductionReport {
  int clause_count = 0;
  int vertex_count = 0;
  int edge_count = 0;
  bool counts_match = false;  // 32m vertices and 40m edges
  bool connected = false;
  bool co_connected = false;
  bool satisfied = false;
  AssignmentCover witness;
  ValidationReport validation;
  int target = 0;              // 25m
  bool cost_decomposes = false;  // sum of per-clause costs, 25 or 26 each
  bool cost_matches = false;   // cost == 25m exactly when satisfied
  bool hyperedges_local = false;  // every hyperedge inside one clause gadget
  std::vector<std::string> notes;

  bool passed() const {
    return counts_match && connected && co_connected && validation.valid && cost_decomposes &&
           cost_matches && hyperedges_local;
  }
};

ReductionReport verify_reduction(const CnfFormula& f, const Assignment& a,
                                 const SearchBudget& budget = {});

}  // namespace mcts
