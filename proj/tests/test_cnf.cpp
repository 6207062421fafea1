#include <doctest.h>

#include "mempso/cnf.hpp"
#include "mempso/instances.hpp"
#include "support.hpp"

using namespace mempso;
using mempso::testing::bits;
using mempso::testing::example_formula;

TEST_CASE("evaluate counts satisfied clauses") {
  const auto f = example_formula();
  CHECK(evaluate(CnfFormula{}, Assignment{}) == 0);
  CHECK(evaluate(f, bits({1, 1, 1, 1})) == 4);
  CHECK(evaluate(f, bits({0, 0, 1, 0})) == 2);
}

TEST_CASE("unsatisfied_clauses lists false clauses in order") {
  const auto f = example_formula();
  CHECK(unsatisfied_clauses(f, bits({1, 1, 1, 1})).empty());
  CHECK(unsatisfied_clauses(f, bits({0, 0, 1, 0})) == std::vector<std::size_t>{0, 3});
  CHECK(unsatisfied_clauses(CnfFormula{}, Assignment{}).empty());
}

TEST_CASE("assignment length mismatch is rejected") {
  const auto f = example_formula();
  CHECK_THROWS_AS(evaluate(f, bits({1, 0, 1})), InvalidAssignment);
  CHECK_THROWS_AS(unsatisfied_clauses(f, Assignment(5)), InvalidAssignment);
}

TEST_CASE("formula construction validates clauses") {
  CHECK_THROWS_AS(CnfFormula(2, {Clause({})}), std::invalid_argument);
  CHECK_THROWS_AS(CnfFormula(2, {Clause({Literal{2, false}})}), std::invalid_argument);
}

TEST_CASE("clauses drop repeated literals but keep tautologies") {
  Clause c({{0, false}, {0, false}, {1, true}, {0, true}});
  REQUIRE(c.size() == 3);
  const CnfFormula f(2, {c});
  for (int a = 0; a < 4; ++a) CHECK(evaluate(f, bits({a & 1, a >> 1})) == 1);
}

TEST_CASE("parse_dimacs reads the example formula") {
  const auto f = parse_dimacs("p cnf 4 4\n1 2 -3 0\n-1 2 3 0\n-1 -2 3 0\n1 -3 4 0\n");
  CHECK(f == example_formula());

  const auto empty = parse_dimacs("p cnf 1 0\n");
  CHECK(empty.variable_count() == 1);
  CHECK(empty.clause_count() == 0);
}

TEST_CASE("parse_dimacs accepts comments, split clauses and SATLIB trailers") {
  const auto f = parse_dimacs(
      "c header comment\r\np cnf 4 4\n1 2\n -3 0 -1 2 3 0\nc mid comment\n-1 -2 3 0 1 -3 4 0\n%\n0\n");
  CHECK(f == example_formula());
}

TEST_CASE("parse_dimacs errors carry line numbers") {
  auto line_of = [](std::string_view text) {
    try {
      parse_dimacs(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    FAIL("no parse error");
    return std::size_t{999};
  };
  CHECK(line_of("p cnf 2 1\n3 0\n") == 2);
  CHECK(line_of("p cnf 2 1\n-3 0\n") == 2);
  CHECK(line_of("1 2 0\n") == 1);
  CHECK(line_of("p cnf 2 1\np cnf 2 1\n1 0\n") == 2);
  CHECK(line_of("p cnf 2 2\n1 0\n\n0\n") == 4);
  CHECK(line_of("p cnf 2 1\n1 x 0\n") == 2);
  CHECK(line_of("p cnf 2 1\n1 0\n2 0\n") == 3);
  CHECK(line_of("p cnf 2 2\n1 0\n") == 0);
  CHECK(line_of("c only\n") == 0);
  CHECK(line_of("p cnf 2 1\n1 2\n") == 2);
  CHECK(line_of("p dnf 2 1\n1 0\n") == 1);
}

TEST_CASE("write_dimacs emits canonical text") {
  CHECK(write_dimacs(CnfFormula{}) == "p cnf 0 0\n");
  CHECK(write_dimacs(example_formula()) ==
        "p cnf 4 4\n1 2 -3 0\n-1 2 3 0\n-1 -2 3 0\n1 -3 4 0\n");
  CHECK(write_dimacs(CnfFormula{}, {"hello"}) == "c hello\np cnf 0 0\n");
}

TEST_CASE("property: parse(write(f)) == f for generated and mixed formulas") {
  RandomStream rng(11, 0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = generate({3 + rng.below(30), rng.below(80), seed});
    CHECK(parse_dimacs(write_dimacs(g, {"round trip"})) == g);
    const auto h = mempso::testing::random_mixed_formula(1 + rng.below(10), rng.below(20), rng);
    CHECK(parse_dimacs(write_dimacs(h)) == h);
  }
}

TEST_CASE("property: fitness and false clauses partition m; flips are local") {
  RandomStream rng(5, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    const auto f = mempso::testing::random_mixed_formula(n, rng.below(30), rng);
    auto a = mempso::testing::random_assignment(n, rng);
    const auto fit = evaluate(f, a);
    CHECK(fit == mempso::testing::naive_fitness(f, a));
    CHECK(fit + unsatisfied_clauses(f, a).size() == f.clause_count());
    CHECK(fit <= f.clause_count());
    CHECK((fit == f.clause_count()) == unsatisfied_clauses(f, a).empty());

    const std::size_t v = rng.below(n);
    std::size_t touching = 0;
    for (const auto& c : f.clauses())
      for (const auto& l : c)
        if (l.variable == v) {
          ++touching;
          break;
        }
    a.flip(v);
    const auto after = evaluate(f, a);
    CHECK((after > fit ? after - fit : fit - after) <= touching);
  }
}
