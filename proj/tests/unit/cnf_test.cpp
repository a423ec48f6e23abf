#include <doctest.h>

#include <stdexcept>

#include "mcts/cnf.hpp"
#include "mcts/error.hpp"

using namespace mcts;

TEST_CASE("parse_dimacs accepts valid formulas") {
  const CnfFormula f = parse_dimacs("c example\np cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
  CHECK(f.variable_count == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0][1] == Literal{2, true});
  CHECK(f.clauses[1][2] == Literal{3, false});
  CHECK(parse_dimacs(format_dimacs(f)).clauses == f.clauses);

  const CnfFormula split = parse_dimacs("p cnf 3 2\n1 2\n3 0 -1 -2\n-3 0\n%\n0\n");
  CHECK(split.clauses.size() == 2);
}

TEST_CASE("parse_dimacs rejects") {
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1 1 -1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 3 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p dnf 3 1\n1 2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("1 2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 3\n1 2 3 0\n-1 -2 -3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 3 0\n-1 -2 -3\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 4 0\n-1 -2 -3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 x 0\n-1 -2 -3 0\n"), ParseError);
  try {
    parse_dimacs("p cnf 3 2\n1 2 3 0\n-1 2 -3 0\n");
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("2 (no negative occurrence)") != std::string::npos);
  }
}

TEST_CASE("assignments") {
  const CnfFormula f = parse_dimacs("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
  const Assignment a = parse_assignment("v 1 -2 -3 0", 3);
  CHECK(a == Assignment{true, false, false});
  CHECK(satisfies(f, a));
  CHECK_FALSE(satisfies(f, parse_assignment("1 2 3", 3)));
  CHECK_THROWS_AS(parse_assignment("1 -2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_assignment("1 -1 2 3", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_assignment("1 2 4", 3), std::invalid_argument);
}
