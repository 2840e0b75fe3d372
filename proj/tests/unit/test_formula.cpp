#include "doctest.h"
#include "ltlshield/errors.hpp"
#include "ltlshield/monitor/parser.hpp"
#include "support/random_formula.hpp"

using namespace ltlshield;
using namespace ltlshield::monitor;

TEST_CASE("parse: case-study formula") {
  Alphabet ap({"tower", "fast"});
  auto f = parse_formula("(!tower) U (tower & fast)", ap);
  CHECK(f == Until(Not(Atom("tower")), And(Atom("tower"), Atom("fast"))));
}

TEST_CASE("parse: unary binds tighter than binary") {
  Alphabet ap({"a"});
  CHECK(parse_formula("G !a | X a", ap) == Or(Globally(Not(Atom("a"))), Next(Atom("a"))));
}

TEST_CASE("parse: precedence ladder") {
  Alphabet ap({"a", "b", "c"});
  // U over &, & over |, | over ->
  CHECK(parse_formula("a U b & c", ap) == And(Until(Atom("a"), Atom("b")), Atom("c")));
  CHECK(parse_formula("a & b | c", ap) == Or(And(Atom("a"), Atom("b")), Atom("c")));
  CHECK(parse_formula("a | b -> c", ap) == Or(Not(Or(Atom("a"), Atom("b"))), Atom("c")));
  // U, W, R and -> associate to the right
  CHECK(parse_formula("a U b U c", ap) == Until(Atom("a"), Until(Atom("b"), Atom("c"))));
  CHECK(parse_formula("a W b R c", ap) == WeakUntil(Atom("a"), Release(Atom("b"), Atom("c"))));
  CHECK(parse_formula("a -> b -> c", ap) == Or(Not(Atom("a")), Or(Not(Atom("b")), Atom("c"))));
  CHECK(parse_formula("true & !false", ap) == And(True(), Not(False())));
}

TEST_CASE("parse: errors carry positions") {
  Alphabet ap({"a"});
  try {
    parse_formula("a U", ap);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
    CHECK(std::string(e.what()).find("end of input") != std::string::npos);
  }
  try {
    parse_formula("a & b", ap);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("undeclared") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_formula("(a", ap), ParseError);
  CHECK_THROWS_AS(parse_formula("a a", ap), ParseError);
  CHECK_THROWS_AS(parse_formula("a - a", ap), ParseError);
  CHECK_THROWS_AS(parse_formula("", ap), ParseError);
  CHECK_THROWS_AS(parse_formula("a # a", ap), ParseError);
}

TEST_CASE("to_string round-trips through the parser") {
  testing::FormulaGenerator gen({"a", "b"}, 11);
  Alphabet ap({"a", "b"});
  for (int i = 0; i < 300; ++i) {
    auto f = gen.next(8);
    CHECK(parse_formula(f.to_string(), ap) == f);
  }
}

TEST_CASE("to_nnf: dualities") {
  auto a = Atom("a");
  auto b = Atom("b");
  CHECK(to_nnf(Not(Until(a, b))) == Release(Not(a), Not(b)));
  CHECK(to_nnf(Not(Not(a))) == a);
  CHECK(to_nnf(Not(Globally(a))) == Until(True(), Not(a)));
  CHECK(to_nnf(Finally(a)) == Until(True(), a));
  CHECK(to_nnf(Globally(a)) == Release(False(), a));
  CHECK(to_nnf(Not(Next(a))) == Next(Not(a)));
  CHECK(to_nnf(Not(And(a, True()))) == Or(Not(a), False()));
}

TEST_CASE("to_nnf output is in negation normal form") {
  testing::FormulaGenerator gen({"a", "b"}, 5);
  for (int i = 0; i < 300; ++i) {
    auto f = gen.next(8);
    CHECK(is_nnf(to_nnf(f)));
  }
}

TEST_CASE("formula helpers") {
  auto f = Until(Not(Atom("t")), And(Atom("t"), Atom("f")));
  CHECK(f.size() == 6);
  CHECK(f.atoms() == std::vector<std::string>{"f", "t"});
  CHECK(Atom("t").is_literal());
  CHECK(Not(Atom("t")).is_literal());
  CHECK_FALSE(Next(Atom("t")).is_literal());
  CHECK_THROWS_AS(Formula::unary(Op::And, True()), Error);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({"1a"}), Error);
}
