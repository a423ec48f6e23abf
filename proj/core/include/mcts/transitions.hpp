#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcts/graph.hpp"

namespace mcts {

// The transition {ab, bc}, written abc. Canonical form keeps a < c; the
// ordering sorts by (middle, a, c).
struct Transition {
  Vertex a = 0;
  Vertex middle = 0;
  Vertex c = 0;

  Transition() = default;
  Transition(Vertex end1, Vertex mid, Vertex end2)
      : a(end1 < end2 ? end1 : end2), middle(mid), c(end1 < end2 ? end2 : end1) {}

  friend bool operator==(const Transition&, const Transition&) = default;
  friend std::strong_ordering operator<=>(const Transition& x, const Transition& y) {
    if (auto cmp = x.middle <=> y.middle; cmp != 0) return cmp;
    if (auto cmp = x.a <=> y.a; cmp != 0) return cmp;
    return x.c <=> y.c;
  }
};

// Sorted, duplicate-free set of canonical transitions.
class TransitionSet {
 public:
  TransitionSet() = default;
  explicit TransitionSet(std::vector<Transition> transitions);

  const std::vector<Transition>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(const Transition& t) const;

  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  void insert(const Transition& t);
  void merge(const TransitionSet& other);

  friend bool operator==(const TransitionSet&, const TransitionSet&) = default;

 private:
  std::vector<Transition> items_;
};

using Walk = std::vector<Vertex>;

// Throws std::invalid_argument unless both edges of every transition exist
// in g and its ends are distinct.
void check_transitions(const Graph& g, const TransitionSet& t);

// All sum_v C(d(v), 2) transitions of g.
TransitionSet enumerate_transitions(const Graph& g);

// Every position i has v_i v_{i+1} v_{i+2} in t or v_i == v_{i+2}. Throws
// std::invalid_argument if w is empty or not a walk of g.
bool walk_is_compatible(const Graph& g, const TransitionSet& t, const Walk& w);

struct Reachability {
  Vertex source = 0;
  std::vector<char> reachable;          // indexed by vertex
  std::vector<std::optional<Walk>> witness;  // compatible walk source -> v

  std::vector<Vertex> vertices() const;
};

// Vertices reachable from `source` by a t-compatible walk, each with a witness.
Reachability t_reachable(const Graph& g, const TransitionSet& t, Vertex source);

bool is_t_connected(const Graph& g, const TransitionSet& t);

// Some pair (u, v), u < v, with no t-compatible walk between them.
std::optional<std::pair<Vertex, Vertex>> find_unconnected_pair(const Graph& g,
                                                               const TransitionSet& t);

// ---- text format ----------------------------------------------------------

// One "a b c" per line (b is the middle vertex); '#' comments. Validated
// against g.
TransitionSet parse_transitions(std::istream& in, const Graph& g);
TransitionSet parse_transitions(std::string_view text, const Graph& g);

// Canonical order: (b, min(a,c), max(a,c)).
std::string format_transitions(const TransitionSet& t);

}  // namespace mcts
