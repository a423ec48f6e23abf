#include "mcts/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "mcts/conversions.hpp"
#include "mcts/error.hpp"
#include "mcts/solvers.hpp"

namespace mcts {

Hypergraph::Hypergraph(std::vector<std::vector<Vertex>> hyperedges)
    : hyperedges_(std::move(hyperedges)) {
  for (auto& e : hyperedges_) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  std::sort(hyperedges_.begin(), hyperedges_.end());
  const auto before = hyperedges_.size();
  hyperedges_.erase(std::unique(hyperedges_.begin(), hyperedges_.end()), hyperedges_.end());
  collapsed_ = static_cast<int>(before - hyperedges_.size());
}

int cost(const Hypergraph& h) {
  int total = 0;
  for (const auto& e : h) total += static_cast<int>(e.size()) - 2;
  return total;
}

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kTooSmall: return "too_small";
    case ViolationKind::kVertexOutOfRange: return "vertex_out_of_range";
    case ViolationKind::kNotConnected: return "not_connected";
    case ViolationKind::kNotCoConnected: return "not_co_connected";
    case ViolationKind::kUncoveredPair: return "uncovered_pair";
    case ViolationKind::kOutsideUniverse: return "outside_universe";
    case ViolationKind::kForbiddenPair: return "forbidden_pair";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream out;
  out << violation_name(kind);
  if (kind == ViolationKind::kUncoveredPair) {
    out << " (" << pair.first << ", " << pair.second << ")";
  } else {
    if (kind == ViolationKind::kForbiddenPair) out << " (" << pair.first << ", " << pair.second << ")";
    out << " {";
    for (std::size_t i = 0; i < hyperedge.size(); ++i) out << (i ? " " : "") << hyperedge[i];
    out << "}";
  }
  return out.str();
}

namespace {

enum class Dual { kConnecting, kCoConnecting };

ValidationReport validate(const Graph& g, const Hypergraph& h, Dual kind) {
  ValidationReport report;
  report.cost = cost(h);
  const int n = g.vertex_count();
  std::vector<std::vector<int>> member_of(n);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& e = h.hyperedges()[i];
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return !g.contains(v); })) {
      report.violations.push_back({ViolationKind::kVertexOutOfRange, e});
      continue;
    }
    for (Vertex v : e) member_of[v].push_back(static_cast<int>(i));
    if (e.size() < 2) {
      report.violations.push_back({ViolationKind::kTooSmall, e});
      continue;
    }
    if (kind == Dual::kConnecting && !induces_connected(g, e)) {
      report.violations.push_back({ViolationKind::kNotConnected, e});
    }
    if (kind == Dual::kCoConnecting && !induces_co_connected(g, e)) {
      report.violations.push_back({ViolationKind::kNotCoConnected, e});
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool required = (kind == Dual::kConnecting) != g.adjacent(u, v);
      if (!required) continue;
      const auto& a = member_of[u];
      const auto& b = member_of[v];
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (common.empty()) {
        Violation missing{ViolationKind::kUncoveredPair, {}};
        missing.pair = {u, v};
        report.violations.push_back(std::move(missing));
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

}  // namespace

ValidationReport validate_connecting(const Graph& g, const Hypergraph& h) {
  return validate(g, h, Dual::kConnecting);
}

ValidationReport validate_co_connecting(const Graph& g, const Hypergraph& h) {
  return validate(g, h, Dual::kCoConnecting);
}

TransitionSet hypergraph_to_transitions(const Graph& g, const Hypergraph& h) {
  const auto report = validate_connecting(g, h);
  if (!report.valid) {
    throw std::invalid_argument("not a connecting hypergraph: " +
                                report.violations.front().describe());
  }
  TransitionSet out;
  for (const auto& e : h) {
    // Local ids follow the sorted order of e, so "lowest-id neighbor" is the
    // same choice in both numberings.
    const Graph sub = g.induced(e);
    const Graph tree = Graph::from_edges(sub.vertex_count(), spanning_tree(sub));
    for (const Transition& t : tree_transition_set(tree)) {
      out.insert(Transition(e[t.a], e[t.middle], e[t.c]));
    }
  }
  return out;
}

ParsedHypergraph parse_hypergraph(std::istream& in, int vertex_count) {
  std::string line;
  int line_no = 0;
  std::vector<std::vector<Vertex>> edges;
  std::vector<std::string> warnings;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::vector<Vertex> e;
    std::string token;
    while (ss >> token) {
      long long v = 0;
      std::size_t used = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw ParseError(line_no, "not a vertex id: '" + token + "'");
      if (v < 0 || v >= vertex_count) throw ParseError(line_no, "vertex out of range");
      if (std::find(e.begin(), e.end(), static_cast<Vertex>(v)) != e.end()) {
        throw ParseError(line_no, "vertex listed twice in one hyperedge");
      }
      e.push_back(static_cast<Vertex>(v));
    }
    edges.push_back(std::move(e));
  }
  ParsedHypergraph out{Hypergraph(std::move(edges)), {}};
  if (const int dups = out.hypergraph.collapsed_duplicates(); dups > 0) {
    out.warnings.push_back("collapsed " + std::to_string(dups) + " duplicate hyperedge(s)");
  }
  return out;
}

ParsedHypergraph parse_hypergraph(std::string_view text, int vertex_count) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in, vertex_count);
}

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  for (const auto& e : h) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace mcts
