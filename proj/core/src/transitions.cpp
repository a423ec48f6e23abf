#include "mcts/transitions.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "disjoint_sets.hpp"
#include "edge_index.hpp"
#include "mcts/conversions.hpp"
#include "mcts/error.hpp"

namespace mcts {

TransitionSet::TransitionSet(std::vector<Transition> transitions) : items_(std::move(transitions)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool TransitionSet::contains(const Transition& t) const {
  return std::binary_search(items_.begin(), items_.end(), t);
}

void TransitionSet::insert(const Transition& t) {
  auto it = std::lower_bound(items_.begin(), items_.end(), t);
  if (it == items_.end() || *it != t) items_.insert(it, t);
}

void TransitionSet::merge(const TransitionSet& other) {
  std::vector<Transition> out;
  out.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out));
  items_ = std::move(out);
}

void check_transitions(const Graph& g, const TransitionSet& t) {
  for (const Transition& x : t) {
    if (x.a == x.c || !g.adjacent(x.a, x.middle) || !g.adjacent(x.middle, x.c)) {
      throw std::invalid_argument("transition " + std::to_string(x.a) + " " +
                                  std::to_string(x.middle) + " " + std::to_string(x.c) +
                                  " is not a pair of adjacent edges of the graph");
    }
  }
}

TransitionSet enumerate_transitions(const Graph& g) {
  std::vector<Transition> out;
  for (Vertex b = 0; b < g.vertex_count(); ++b) {
    const auto& nb = g.neighbors(b);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) out.emplace_back(nb[i], b, nb[j]);
    }
  }
  return TransitionSet(std::move(out));
}

bool walk_is_compatible(const Graph& g, const TransitionSet& t, const Walk& w) {
  if (w.empty()) throw std::invalid_argument("empty walk");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!g.contains(w[i])) throw std::invalid_argument("walk vertex out of range");
    if (i + 1 < w.size() && !g.adjacent(w[i], w[i + 1])) {
      throw std::invalid_argument("consecutive walk vertices " + std::to_string(w[i]) + " and " +
                                  std::to_string(w[i + 1]) + " are not adjacent");
    }
  }
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    if (w[i] == w[i + 2]) continue;
    if (!t.contains(Transition(w[i], w[i + 1], w[i + 2]))) return false;
  }
  return true;
}

namespace {

// Edge components under "shares a transition". Without a direction on the
// walk (backtracking is free), two edges are mutually reachable iff they are
// in the same component.
std::vector<int> edge_components(const detail::EdgeIndex& index, const TransitionSet& t) {
  detail::DisjointSets sets(index.size());
  for (const Transition& x : t) {
    const int e1 = index.find(x.a, x.middle);
    const int e2 = index.find(x.middle, x.c);
    if (e1 < 0 || e2 < 0 || x.a == x.c) {
      throw std::invalid_argument("transition set does not belong to the graph");
    }
    sets.unite(e1, e2);
  }
  std::vector<int> comp(index.size());
  for (int e = 0; e < index.size(); ++e) comp[e] = sets.find(e);
  return comp;
}

// Sorted component ids of the edges incident to each vertex.
std::vector<std::vector<int>> incident_components(const Graph& g, const detail::EdgeIndex& index,
                                                  const std::vector<int>& comp) {
  std::vector<std::vector<int>> out(g.vertex_count());
  for (int e = 0; e < index.size(); ++e) {
    out[index.edge(e).u].push_back(comp[e]);
    out[index.edge(e).v].push_back(comp[e]);
  }
  for (auto& row : out) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return out;
}

bool sorted_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

std::vector<Vertex> Reachability::vertices() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < reachable.size(); ++v) {
    if (reachable[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Reachability t_reachable(const Graph& g, const TransitionSet& t, Vertex source) {
  if (!g.contains(source)) throw std::invalid_argument("source vertex out of range");
  check_transitions(g, t);
  const detail::EdgeIndex index(g);
  const int m = index.size();

  // Edge-level BFS; pred[e] is the edge we came from and hinge[e] the vertex
  // shared with it.
  std::vector<std::vector<std::pair<int, Vertex>>> links(m);
  for (const Transition& x : t) {
    const int e1 = index.at(x.a, x.middle);
    const int e2 = index.at(x.middle, x.c);
    links[e1].emplace_back(e2, x.middle);
    links[e2].emplace_back(e1, x.middle);
  }
  std::vector<int> pred(m, -2);
  std::vector<Vertex> hinge(m, -1);
  std::vector<int> queue;
  for (Vertex w : g.neighbors(source)) {
    const int e = index.at(source, w);
    pred[e] = -1;
    queue.push_back(e);
  }
  std::vector<int> reached_by(g.vertex_count(), -1);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int e = queue[head];
    for (Vertex end : {index.edge(e).u, index.edge(e).v}) {
      if (reached_by[end] == -1) reached_by[end] = e;
    }
    for (const auto& [next, mid] : links[e]) {
      if (pred[next] != -2) continue;
      pred[next] = e;
      hinge[next] = mid;
      queue.push_back(next);
    }
  }

  Reachability out;
  out.source = source;
  out.reachable.assign(g.vertex_count(), 0);
  out.witness.assign(g.vertex_count(), std::nullopt);
  out.reachable[source] = 1;
  out.witness[source] = Walk{source};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == source || reached_by[v] < 0) continue;
    std::vector<int> chain;
    for (int e = reached_by[v]; e >= 0; e = pred[e]) chain.push_back(e);
    std::reverse(chain.begin(), chain.end());

    auto other = [&](int e, Vertex x) {
      return index.edge(e).u == x ? index.edge(e).v : index.edge(e).u;
    };
    Walk walk{source, other(chain[0], source)};
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const Vertex mid = hinge[chain[i]];
      if (walk.back() != mid) walk.push_back(mid);  // turn back along the current edge
      walk.push_back(other(chain[i], mid));
    }
    if (walk.back() != v) walk.push_back(v);
    out.reachable[v] = 1;
    out.witness[v] = std::move(walk);
  }
  return out;
}

std::optional<std::pair<Vertex, Vertex>> find_unconnected_pair(const Graph& g,
                                                               const TransitionSet& t) {
  const detail::EdgeIndex index(g);
  const auto comp = edge_components(index, t);
  const auto inc = incident_components(g, index, comp);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (!sorted_intersect(inc[u], inc[v])) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

bool is_t_connected(const Graph& g, const TransitionSet& t) {
  return !find_unconnected_pair(g, t).has_value();
}

Hypergraph transitions_to_hypergraph(const Graph& g, const TransitionSet& t) {
  if (auto pair = find_unconnected_pair(g, t)) {
    throw std::invalid_argument("transition set is not connecting: no compatible walk between " +
                                std::to_string(pair->first) + " and " +
                                std::to_string(pair->second));
  }
  // Classes of the transitive closure of "shares an edge".
  const detail::EdgeIndex index(g);
  const auto& items = t.items();
  detail::DisjointSets classes(static_cast<int>(items.size()));
  std::vector<int> first_user(index.size(), -1);
  for (int i = 0; i < static_cast<int>(items.size()); ++i) {
    for (int e : {index.at(items[i].a, items[i].middle), index.at(items[i].middle, items[i].c)}) {
      if (first_user[e] < 0) {
        first_user[e] = i;
      } else {
        classes.unite(first_user[e], i);
      }
    }
  }
  std::map<int, std::vector<Vertex>> members;
  for (int i = 0; i < static_cast<int>(items.size()); ++i) {
    auto& set = members[classes.find(i)];
    set.insert(set.end(), {items[i].a, items[i].middle, items[i].c});
  }
  std::vector<std::vector<Vertex>> hyperedges;
  for (auto& [root, vs] : members) hyperedges.push_back(std::move(vs));
  return Hypergraph(std::move(hyperedges));
}

TransitionSet parse_transitions(std::istream& in, const Graph& g) {
  std::string line;
  int line_no = 0;
  std::vector<Transition> out;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    long long v[3];
    std::string rest;
    if (!(ss >> v[0] >> v[1] >> v[2]) || (ss >> rest)) {
      throw ParseError(line_no, "malformed transition line, expected \"a b c\"");
    }
    for (long long x : v) {
      if (x < 0 || x >= g.vertex_count()) throw ParseError(line_no, "vertex out of range");
    }
    const Transition x(static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1]),
                       static_cast<Vertex>(v[2]));
    if (x.a == x.c || !g.adjacent(x.a, x.middle) || !g.adjacent(x.middle, x.c)) {
      throw ParseError(line_no, "not a transition of the graph");
    }
    out.push_back(x);
  }
  return TransitionSet(std::move(out));
}

TransitionSet parse_transitions(std::string_view text, const Graph& g) {
  std::istringstream in{std::string(text)};
  return parse_transitions(in, g);
}

std::string format_transitions(const TransitionSet& t) {
  std::ostringstream out;
  for (const Transition& x : t) out << x.a << ' ' << x.middle << ' ' << x.c << '\n';
  return out.str();
}

}  // namespace mcts
