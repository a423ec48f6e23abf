#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mcts {

// Variables are numbered from 1, as in DIMACS.
struct Literal {
  int variable = 0;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int variable_count = 0;
  std::vector<Clause> clauses;
};

// Throws std::invalid_argument unless every clause has three distinct
// variables in [1, variable_count] and every variable occurs at least once
// positively and at least once negatively.
void check_formula(const CnfFormula& f);

// DIMACS CNF: "c" comment lines, a "p cnf <vars> <clauses>" header, then
// 0-terminated clauses. Syntax errors throw ParseError carrying the line;
// violations of check_formula throw std::invalid_argument.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);

std::string format_dimacs(const CnfFormula& f);

// assignment[x - 1] is the value of variable x.
using Assignment = std::vector<bool>;

// Whitespace-separated signed variable ids ("1 -2 3"), optionally prefixed by
// "v" and terminated by 0; every variable must appear exactly once. Throws
// std::invalid_argument otherwise.
Assignment parse_assignment(std::string_view text, int variable_count);

bool literal_value(const Literal& l, const Assignment& a);
bool satisfies(const CnfFormula& f, const Assignment& a);

}  // namespace mcts
