#include "mcts/cnf.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "mcts/error.hpp"

namespace mcts {

void check_formula(const CnfFormula& f) {
  if (f.variable_count < 0) throw std::invalid_argument("negative variable count");
  std::vector<char> pos(f.variable_count + 1, 0);
  std::vector<char> neg(f.variable_count + 1, 0);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const Clause& c = f.clauses[i];
    for (int j = 0; j < 3; ++j) {
      const int x = c[j].variable;
      if (x < 1 || x > f.variable_count) {
        throw std::invalid_argument("clause " + std::to_string(i + 1) + ": variable out of range");
      }
      for (int k = 0; k < j; ++k) {
        if (c[k].variable == x) {
          throw std::invalid_argument("clause " + std::to_string(i + 1) + ": repeated variable " +
                                      std::to_string(x));
        }
      }
      (c[j].positive ? pos : neg)[x] = 1;
    }
  }
  std::string missing;
  for (int x = 1; x <= f.variable_count; ++x) {
    if (!pos[x] || !neg[x]) {
      if (!missing.empty()) missing += ", ";
      missing += std::to_string(x) + (pos[x] ? " (no negative occurrence)"
                                     : neg[x] ? " (no positive occurrence)"
                                              : " (unused)");
    }
  }
  if (!missing.empty()) {
    throw std::invalid_argument("every variable needs a positive and a negative occurrence: " +
                                missing);
  }
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  long long declared_clauses = -1;
  std::vector<Literal> current;
  int clause_line = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string token;
    if (!(ss >> token)) continue;
    if (token == "c") continue;
    if (token == "%") break;
    if (token == "p") {
      std::string format;
      long long vars = -1;
      long long clauses = -1;
      std::string rest;
      if (declared_clauses >= 0) throw ParseError(line_no, "second header line");
      if (!(ss >> format >> vars >> clauses) || format != "cnf" || vars < 0 || clauses < 0 ||
          vars > (1 << 24) || (ss >> rest)) {
        throw ParseError(line_no, "malformed header, expected 'p cnf <variables> <clauses>'");
      }
      f.variable_count = static_cast<int>(vars);
      declared_clauses = clauses;
      continue;
    }
    if (declared_clauses < 0) throw ParseError(line_no, "clause before the 'p cnf' header");
    ss.clear();
    ss.str(line);
    while (ss >> token) {
      long long lit = 0;
      std::size_t used = 0;
      try {
        lit = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw ParseError(line_no, "not a literal: '" + token + "'");
      if (lit == 0) {
        if (current.size() != 3) {
          throw ParseError(clause_line, "clause has " + std::to_string(current.size()) +
                                            " literals, expected exactly 3");
        }
        f.clauses.push_back({current[0], current[1], current[2]});
        current.clear();
        continue;
      }
      if (current.empty()) clause_line = line_no;
      const long long x = lit < 0 ? -lit : lit;
      if (x > f.variable_count) throw ParseError(line_no, "variable " + token + " out of range");
      for (const Literal& l : current) {
        if (l.variable == x) throw ParseError(line_no, "repeated variable " + std::to_string(x));
      }
      current.push_back({static_cast<int>(x), lit > 0});
    }
  }
  if (declared_clauses < 0) throw ParseError(0, "missing 'p cnf' header");
  if (!current.empty()) throw ParseError(clause_line, "last clause is not terminated by 0");
  if (static_cast<long long>(f.clauses.size()) != declared_clauses) {
    throw ParseError(0, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                            std::to_string(f.clauses.size()));
  }
  check_formula(f);
  return f;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string format_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out << (l.positive ? "" : "-") << l.variable << ' ';
    out << "0\n";
  }
  return out.str();
}

Assignment parse_assignment(std::string_view text, int variable_count) {
  std::istringstream in{std::string(text)};
  std::vector<char> seen(variable_count + 1, 0);
  Assignment a(variable_count, false);
  std::string token;
  bool terminated = false;
  while (in >> token) {
    if (token == "v" || token == "c") continue;
    if (terminated) throw std::invalid_argument("assignment continues after the terminating 0");
    long long lit = 0;
    std::size_t used = 0;
    try {
      lit = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("not a literal: '" + token + "'");
    if (lit == 0) {
      terminated = true;
      continue;
    }
    const long long x = lit < 0 ? -lit : lit;
    if (x > variable_count) throw std::invalid_argument("variable " + token + " out of range");
    if (seen[x]) throw std::invalid_argument("variable " + std::to_string(x) + " assigned twice");
    seen[x] = 1;
    a[x - 1] = lit > 0;
  }
  for (int x = 1; x <= variable_count; ++x) {
    if (!seen[x]) throw std::invalid_argument("partial assignment: variable " + std::to_string(x) +
                                              " has no value");
  }
  return a;
}

bool literal_value(const Literal& l, const Assignment& a) {
  return a.at(l.variable - 1) == l.positive;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  for (const Clause& c : f.clauses) {
    if (!literal_value(c[0], a) && !literal_value(c[1], a) && !literal_value(c[2], a)) return false;
  }
  return true;
}

}  // namespace mcts
