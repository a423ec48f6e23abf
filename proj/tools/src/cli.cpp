#include "mcts_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json_output.hpp"
#include "mcts/cnf.hpp"
#include "mcts/conversions.hpp"
#include "mcts/error.hpp"
#include "mcts/graph.hpp"
#include "mcts/sat_reduction.hpp"
#include "mcts/solvers.hpp"

namespace mcts::cli {

namespace {

// An input problem: unreadable file, malformed content, bad flag value.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Wraps parse errors with the file name.
template <typename F>
auto parse_file(const std::string& path, F&& parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) {
  return parse_file(path, [](const std::string& text) { return parse_graph(text); });
}

TransitionSet load_transitions(const std::string& path, const Graph& g) {
  return parse_file(path, [&](const std::string& text) { return parse_transitions(text, g); });
}

Hypergraph load_hypergraph(const std::string& path, const Graph& g, std::ostream& err) {
  ParsedHypergraph parsed = parse_file(
      path, [&](const std::string& text) { return parse_hypergraph(text, g.vertex_count()); });
  for (const auto& w : parsed.warnings) err << "warning: " << path << ": " << w << '\n';
  return std::move(parsed.hypergraph);
}

CnfFormula load_cnf(const std::string& path) {
  return parse_file(path, [](const std::string& text) { return parse_dimacs(text); });
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw InputError("the input graph is disconnected");
}

struct Options {
  std::string output = "text";
  std::string input;
  std::string transitions;
  std::string hypergraph;
  bool co = false;
  std::string mode = "auto";
  std::uint64_t max_nodes = SearchBudget{}.max_nodes;
  std::uint64_t max_enumerated = SearchBudget{}.max_enumerated;
  std::string family;
  int size = 0;
  std::uint64_t seed = 0;
  bool dot = false;
  std::string cnf;
  std::string labels;
  std::string assignment_file;
  std::string assignment;
  std::string semantics = "exact";
  bool dual_connected = false;
  std::vector<std::string> only;

  bool json() const { return output == "json"; }
  SearchBudget budget() const { return {max_nodes, max_enumerated}; }
};

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_option("--output", o.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_budget(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-nodes", o.max_nodes, "Search node budget")->capture_default_str();
  cmd->add_option("--max-enumerated", o.max_enumerated, "Candidate enumeration budget")
      ->capture_default_str();
}

// ---- subcommands -----------------------------------------------------------

int cmd_solve(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.input);
  require_connected(g);
  const SolveReport r = solve(g, parse_solve_mode(o.mode), o.budget());
  if (o.json()) {
    out << solve_json(r).dump(2) << '\n';
  } else {
    out << "cost " << r.cost << "\nlower_bound " << r.lower_bound << "\noptimal "
        << (r.optimal ? "true" : "false") << "\nmethod " << method_name(r.method) << '\n';
    if (!r.note.empty()) out << "note " << r.note << '\n';
    out << "transitions " << r.transitions.size() << '\n' << format_transitions(r.transitions);
    out << "hyperedges " << r.hypergraph.size() << '\n' << format_hypergraph(r.hypergraph);
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.input);
  if (!o.transitions.empty()) {
    const TransitionSet t = load_transitions(o.transitions, g);
    const auto missing = find_unconnected_pair(g, t);
    if (o.json()) {
      Json doc = document();
      doc["t_connected"] = !missing.has_value();
      doc["size"] = t.size();
      if (missing) doc["unconnected_pair"] = Json::array({missing->first, missing->second});
      out << doc.dump(2) << '\n';
    } else if (missing) {
      out << "not t-connected: no compatible walk between " << missing->first << " and "
          << missing->second << '\n';
    } else {
      out << "t-connected with " << t.size() << " transitions\n";
    }
    return missing ? kNo : kOk;
  }
  const Hypergraph h = load_hypergraph(o.hypergraph, g, err);
  const ValidationReport r = o.co ? validate_co_connecting(g, h) : validate_connecting(g, h);
  const char* kind = o.co ? "co-connecting" : "connecting";
  if (o.json()) {
    Json doc = document();
    doc["kind"] = kind;
    doc.update(validation_json(r));
    out << doc.dump(2) << '\n';
  } else if (r.valid) {
    out << "valid " << kind << " hypergraph, cost " << r.cost << '\n';
  } else {
    out << "invalid " << kind << " hypergraph, " << r.violations.size() << " violation(s)\n";
    for (const Violation& v : r.violations) out << "  " << v.describe() << '\n';
  }
  return r.valid ? kOk : kNo;
}

int cmd_convert(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(o.input);
  try {
    if (!o.transitions.empty()) {
      const TransitionSet t = load_transitions(o.transitions, g);
      const Hypergraph h = transitions_to_hypergraph(g, t);
      if (o.json()) {
        Json doc = document();
        doc["cost"] = cost(h);
        doc["hyperedges"] = hyperedges_json(h);
        out << doc.dump(2) << '\n';
      } else {
        out << format_hypergraph(h);
      }
      return kOk;
    }
    const Hypergraph h = load_hypergraph(o.hypergraph, g, err);
    const TransitionSet t = hypergraph_to_transitions(g, h);
    if (o.json()) {
      Json doc = document();
      doc["size"] = t.size();
      doc["transitions"] = transitions_json(t);
      out << doc.dump(2) << '\n';
    } else {
      out << format_transitions(t);
    }
    return kOk;
  } catch (const std::invalid_argument& e) {
    // The input parsed but is not a connecting object of g.
    err << "error: " << e.what() << '\n';
    return kNo;
  }
}

int cmd_tau(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.input);
  require_connected(g);
  const int t = tau(g);
  const int lb = lower_bound(g);
  const Hypergraph h = tau_heuristic_hypergraph(g);
  const auto cut = g.vertex_count() >= 3 ? cut_vertices(g) : std::vector<Vertex>{};
  if (o.json()) {
    Json doc = document();
    doc["tau"] = t;
    doc["lower_bound"] = lb;
    doc["cut_vertices"] = cut;
    doc["hyperedges"] = hyperedges_json(h);
    out << doc.dump(2) << '\n';
  } else {
    out << "tau " << t << "\nlower_bound " << lb << "\ncut_vertices " << cut.size() << '\n'
        << "hyperedges " << h.size() << '\n' << format_hypergraph(h);
  }
  return kOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  GraphFamily family;
  Graph g;
  try {
    family = parse_family(o.family);
    g = generate(family, o.size, o.seed);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (o.dot) {
    out << format_dot(g, std::string(family_name(family)));
  } else if (o.json()) {
    Json doc = document();
    doc["family"] = std::string(family_name(family));
    doc["size"] = o.size;
    doc.update(graph_json(g));
    out << doc.dump(2) << '\n';
  } else {
    out << format_graph(g);
  }
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const CnfFormula f = load_cnf(o.cnf);
  GadgetGraph gadget;
  try {
    gadget = build_formula_graph(f);
  } catch (const std::invalid_argument& e) {
    throw InputError(o.cnf + ": " + e.what());
  }
  if (o.json()) {
    Json doc = document();
    doc["graph"] = graph_json(gadget.graph);
    doc["labels"] = labels_json(gadget);
    out << doc.dump(2) << '\n';
  } else {
    out << format_graph(gadget.graph);
  }
  if (!o.labels.empty()) {
    std::ofstream file(o.labels);
    if (!file) throw InputError("cannot write '" + o.labels + "'");
    Json doc = document();
    doc.update(labels_json(gadget));
    file << doc.dump(2) << '\n';
  }
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  ConfigurationOptions options;
  options.semantics = o.semantics == "exact" ? Semantics::kExact : Semantics::kAtLeast;
  options.require_dual_connectivity = o.dual_connected;
  std::vector<TableEntry> table;
  if (o.only.empty()) {
    table = configuration_table(o.budget(), options);
  } else {
    for (const auto& text : o.only) {
      Configuration c;
      try {
        c = Configuration::parse(text);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      table.push_back({c, configuration_min_cost(c, o.budget(), options)});
    }
  }
  const bool all_optimal =
      std::all_of(table.begin(), table.end(), [](const TableEntry& e) { return e.result.optimal(); });
  if (o.json()) {
    Json doc = document();
    doc["semantics"] = o.semantics;
    doc["dual_connected"] = o.dual_connected;
    doc["entries"] = table_json(table);
    out << doc.dump(2) << '\n';
  } else {
    for (const TableEntry& e : table) {
      out << e.config.to_string() << ' ';
      if (e.result.optimal()) {
        out << *e.result.cost;
      } else if (e.result.cost) {
        out << "<=" << *e.result.cost << " (" << status_name(e.result.status) << ")";
      } else {
        out << status_name(e.result.status);
      }
      out << '\n';
    }
  }
  return all_optimal ? kOk : kNo;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const CnfFormula f = load_cnf(o.cnf);
  const std::string text = o.assignment_file.empty() ? o.assignment : read_file(o.assignment_file);
  Assignment a;
  try {
    a = parse_assignment(text, f.variable_count);
    build_formula_graph(f);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const ReductionReport r = verify_reduction(f, a, o.budget());
  if (o.json()) {
    out << reduction_json(r).dump(2) << '\n';
  } else {
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << "clauses " << r.clause_count << "\nvertices " << r.vertex_count << "\nedges "
        << r.edge_count << "\ncounts_match " << yes(r.counts_match) << "\nconnected "
        << yes(r.connected) << "\nco_connected " << yes(r.co_connected) << "\nsatisfied "
        << yes(r.satisfied) << "\ncost " << r.witness.cost << "\ntarget " << r.target << '\n';
    for (std::size_t i = 0; i < r.witness.clause_costs.size(); ++i) {
      out << "clause " << i << ' ' << r.witness.clause_configurations[i].to_string() << ' '
          << r.witness.clause_costs[i] << '\n';
    }
    out << "cover_valid " << yes(r.validation.valid) << "\ncost_decomposes "
        << yes(r.cost_decomposes) << "\ncost_matches " << yes(r.cost_matches)
        << "\nhyperedges_local " << yes(r.hyperedges_local) << '\n';
    for (const auto& n : r.notes) out << "note " << n << '\n';
    out << (r.passed() ? "PASS" : "FAIL") << '\n';
  }
  return r.passed() ? kOk : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum connecting transition sets: solvers, checkers and the SAT reduction",
               "mcts"};
  app.require_subcommand(1);
  Options o;

  auto* solve_cmd = app.add_subcommand("solve", "Find a small connecting transition set");
  solve_cmd->add_option("--input,-i", o.input, "Graph file")->required();
  solve_cmd->add_option("--mode", o.mode, "auto, heuristic or exact")
      ->check(CLI::IsMember({"auto", "heuristic", "exact"}))
      ->capture_default_str();
  add_budget(solve_cmd, o);
  add_output(solve_cmd, o);

  auto* check_cmd = app.add_subcommand("check", "Check a transition set or hypergraph");
  check_cmd->add_option("--input,-i", o.input, "Graph file")->required();
  auto* t_opt = check_cmd->add_option("--transitions", o.transitions, "Transition file");
  auto* h_opt = check_cmd->add_option("--hypergraph", o.hypergraph, "Hypergraph file");
  check_cmd->add_flag("--co", o.co, "Check a co-connecting hypergraph instead");
  t_opt->excludes(h_opt);
  add_output(check_cmd, o);

  auto* convert_cmd = app.add_subcommand("convert", "Convert transitions <-> hypergraph");
  convert_cmd->add_option("--input,-i", o.input, "Graph file")->required();
  auto* ct_opt = convert_cmd->add_option("--transitions", o.transitions, "Transition file");
  auto* ch_opt = convert_cmd->add_option("--hypergraph", o.hypergraph, "Hypergraph file");
  ct_opt->excludes(ch_opt);
  add_output(convert_cmd, o);

  auto* tau_cmd = app.add_subcommand("tau", "Upper bound tau, its hypergraph and the lower bound");
  tau_cmd->add_option("--input,-i", o.input, "Graph file")->required();
  add_output(tau_cmd, o);

  auto* gen_cmd = app.add_subcommand("generate", "Generate a graph from a named family");
  gen_cmd->add_option("--family", o.family,
                      "path, cycle, complete, path_complement, spider_complement, random_tree")
      ->required();
  gen_cmd->add_option("--size", o.size, "Vertices (branches for spider_complement)")->required();
  gen_cmd->add_option("--seed", o.seed, "Seed for random families")->capture_default_str();
  gen_cmd->add_flag("--dot", o.dot, "Emit Graphviz DOT");
  add_output(gen_cmd, o);

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the gadget graph of a 3-CNF formula");
  reduce_cmd->add_option("--cnf", o.cnf, "DIMACS file")->required();
  reduce_cmd->add_option("--labels", o.labels, "Write the label map as JSON to this file");
  add_output(reduce_cmd, o);

  auto* table_cmd = app.add_subcommand("table", "Minimum clause-gadget cost per configuration");
  table_cmd->add_option("--semantics", o.semantics, "exact or at-least")
      ->check(CLI::IsMember({"exact", "at-least"}))
      ->capture_default_str();
  table_cmd->add_flag("--dual-connected", o.dual_connected,
                      "Also require hyperedges to induce connected subgraphs");
  table_cmd->add_option("--only", o.only, "Solve only these configurations (e.g. UUS SUU)");
  add_budget(table_cmd, o);
  add_output(table_cmd, o);

  auto* verify_cmd =
      app.add_subcommand("verify-reduction", "Check the cover an assignment induces");
  verify_cmd->add_option("--cnf", o.cnf, "DIMACS file")->required();
  auto* af_opt = verify_cmd->add_option("--assignment", o.assignment_file,
                                        "File with signed variable ids, e.g. '1 -2 -3'");
  auto* al_opt = verify_cmd->add_option("--assign", o.assignment, "Signed variable ids inline");
  af_opt->excludes(al_opt);
  add_budget(verify_cmd, o);
  add_output(verify_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(o, out);
    if (check_cmd->parsed()) {
      if (o.transitions.empty() == o.hypergraph.empty()) {
        throw InputError("check needs exactly one of --transitions or --hypergraph");
      }
      return cmd_check(o, out, err);
    }
    if (convert_cmd->parsed()) {
      if (o.transitions.empty() == o.hypergraph.empty()) {
        throw InputError("convert needs exactly one of --transitions or --hypergraph");
      }
      return cmd_convert(o, out, err);
    }
    if (tau_cmd->parsed()) return cmd_tau(o, out);
    if (gen_cmd->parsed()) return cmd_generate(o, out);
    if (reduce_cmd->parsed()) return cmd_reduce(o, out);
    if (table_cmd->parsed()) return cmd_table(o, out);
    if (verify_cmd->parsed()) {
      if (o.assignment_file.empty() && o.assignment.empty()) {
        throw InputError("verify-reduction needs --assignment or --assign");
      }
      return cmd_verify(o, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNo;
  }
  return kBadInput;
}

}  // namespace mcts::cli
