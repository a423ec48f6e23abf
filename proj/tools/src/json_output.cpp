#include "json_output.hpp"

namespace mcts::cli {

namespace {

Json pair_json(int a, int b) { return Json::array({a, b}); }

}  // namespace

Json document() {
  Json doc = Json::object();
  doc["schema"] = 1;
  return doc;
}

Json transitions_json(const TransitionSet& t) {
  Json out = Json::array();
  for (const Transition& x : t) out.push_back(Json::array({x.a, x.middle, x.c}));
  return out;
}

Json hyperedges_json(const Hypergraph& h) {
  Json out = Json::array();
  for (const auto& e : h) out.push_back(e);
  return out;
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(pair_json(e.u, e.v));
  Json out = Json::object();
  out["vertex_count"] = g.vertex_count();
  out["edges"] = std::move(edges);
  return out;
}

Json solve_json(const SolveReport& r) {
  Json doc = document();
  doc["cost"] = r.cost;
  doc["lower_bound"] = r.lower_bound;
  doc["optimal"] = r.optimal;
  doc["method"] = std::string(method_name(r.method));
  doc["transitions"] = transitions_json(r.transitions);
  doc["hyperedges"] = hyperedges_json(r.hypergraph);
  if (!r.note.empty()) doc["note"] = r.note;
  return doc;
}

Json validation_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    Json item = Json::object();
    item["kind"] = std::string(violation_name(v.kind));
    if (!v.hyperedge.empty()) item["hyperedge"] = v.hyperedge;
    if (v.pair.first >= 0) item["pair"] = pair_json(v.pair.first, v.pair.second);
    violations.push_back(std::move(item));
  }
  Json out = Json::object();
  out["valid"] = r.valid;
  out["cost"] = r.cost;
  out["violations"] = std::move(violations);
  return out;
}

Json labels_json(const GadgetGraph& g) {
  Json out = Json::object();
  out["clause_vertices"] = g.clause_vertices;
  out["central_vertices"] = g.central_vertices;
  Json labelled = Json::array();
  for (const LabelledEdge& e : g.labelled_edges) {
    Json item = Json::object();
    item["edge"] = pair_json(e.edge.u, e.edge.v);
    item["t_label"] = pair_json(e.t_label.first, e.t_label.second);
    item["f_label"] = pair_json(e.f_label.first, e.f_label.second);
    labelled.push_back(std::move(item));
  }
  out["labelled_edges"] = std::move(labelled);
  return out;
}

Json table_json(const std::vector<TableEntry>& table) {
  Json rows = Json::array();
  for (const TableEntry& e : table) {
    Json row = Json::object();
    row["config"] = e.config.to_string();
    row["cost"] = e.result.cost ? Json(*e.result.cost) : Json(nullptr);
    row["status"] = std::string(status_name(e.result.status));
    row["candidates"] = e.result.stats.candidates;
    row["nodes"] = e.result.stats.nodes;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json reduction_json(const ReductionReport& r) {
  Json doc = document();
  doc["passed"] = r.passed();
  doc["clauses"] = r.clause_count;
  doc["vertex_count"] = r.vertex_count;
  doc["edge_count"] = r.edge_count;
  doc["counts_match"] = r.counts_match;
  doc["connected"] = r.connected;
  doc["co_connected"] = r.co_connected;
  doc["satisfied"] = r.satisfied;
  doc["cost"] = r.witness.cost;
  doc["target"] = r.target;
  Json clauses = Json::array();
  for (std::size_t i = 0; i < r.witness.clause_costs.size(); ++i) {
    Json c = Json::object();
    c["config"] = r.witness.clause_configurations[i].to_string();
    c["cost"] = r.witness.clause_costs[i];
    clauses.push_back(std::move(c));
  }
  doc["clause_costs"] = std::move(clauses);
  doc["cost_decomposes"] = r.cost_decomposes;
  doc["cost_matches"] = r.cost_matches;
  doc["hyperedges_local"] = r.hyperedges_local;
  doc["validation"] = validation_json(r.validation);
  doc["notes"] = r.notes;
  doc["hyperedges"] = hyperedges_json(r.witness.cover);
  return doc;
}

}  // namespace mcts::cli
