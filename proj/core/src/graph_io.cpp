#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <string>

#include "mcts/error.hpp"
#include "mcts/graph.hpp"

namespace mcts {

namespace {

bool is_blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Reads exactly `count` integers from the line; anything else is an error.
bool read_ints(const std::string& line, long long* out, int count) {
  std::istringstream ss(line);
  for (int i = 0; i < count; ++i) {
    if (!(ss >> out[i])) return false;
  }
  std::string rest;
  return !(ss >> rest);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long header[2] = {0, 0};
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    if (!read_ints(line, header, 2) || header[0] < 0 || header[1] < 0 ||
        header[0] > (1LL << 24)) {
      throw ParseError(line_no, "malformed header, expected \"n m\"");
    }
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError(0, "missing header line \"n m\"");

  const int n = static_cast<int>(header[0]);
  const long long m = header[1];
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    long long uv[2];
    if (!read_ints(line, uv, 2)) throw ParseError(line_no, "malformed edge line, expected \"u v\"");
    if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n) {
      throw ParseError(line_no, "vertex out of range [0, " + std::to_string(n) + ")");
    }
    if (uv[0] == uv[1]) throw ParseError(line_no, "self-loop on vertex " + std::to_string(uv[0]));
    const Edge e(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    if (!seen.insert(e).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, "more edges than the " + std::to_string(m) + " declared");
    }
    edges.push_back(e);
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string format_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mcts
