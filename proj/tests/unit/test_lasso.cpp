#include "doctest.h"
#include "ltlshield/errors.hpp"
#include "ltlshield/monitor/lasso.hpp"

using namespace ltlshield;
using namespace ltlshield::monitor;

TEST_CASE("lasso oracle: basic examples") {
  Alphabet a1({"a"});
  const Letter none{};
  const Letter a = a1.letter({"a"});
  CHECK(lasso_satisfies(Globally(Not(Atom("a"))), a1, {}, {none}));
  CHECK_FALSE(lasso_satisfies(Finally(Atom("a")), a1, {}, {none}));
  CHECK(lasso_satisfies(Finally(Atom("a")), a1, {none, none}, {none, a}));
  CHECK(lasso_satisfies(Globally(Finally(Atom("a"))), a1, {a}, {none, a}));
  CHECK_FALSE(lasso_satisfies(Globally(Finally(Atom("a"))), a1, {none, a}, {none}));
  CHECK(lasso_satisfies(Finally(Globally(Not(Atom("a")))), a1, {a, a}, {none}));
  CHECK(lasso_satisfies(Next(Atom("a")), a1, {none}, {a}));
  // Next on the last position wraps to the loop start.
  CHECK(lasso_satisfies(Next(Next(Atom("a"))), a1, {none}, {a, none}) == false);
  CHECK(lasso_satisfies(Next(Next(Next(Atom("a")))), a1, {none}, {a, none}));
  CHECK_THROWS_AS(lasso_satisfies(Atom("a"), a1, {}, {}), Error);
}

TEST_CASE("lasso oracle: case-study until") {
  Alphabet ap({"t", "f"});
  auto phi = Until(Not(Atom("t")), And(Atom("t"), Atom("f")));
  // ∅ then {t,f} forever: ¬t holds at 0 and t∧f at 1.
  CHECK(lasso_satisfies(phi, ap, {Letter{}}, {ap.letter({"t", "f"})}));
  // Strong until needs the eventuality; weak until does not.
  CHECK_FALSE(lasso_satisfies(phi, ap, {}, {Letter{}}));
  CHECK(lasso_satisfies(WeakUntil(Not(Atom("t")), And(Atom("t"), Atom("f"))), ap, {}, {Letter{}}));
  CHECK_FALSE(lasso_satisfies(phi, ap, {Letter{}}, {ap.letter({"t"})}));
}

TEST_CASE("lasso oracle: release and weak-until fixpoints") {
  Alphabet ap({"a", "b"});
  const Letter none{}, a = ap.letter({"a"}), b = ap.letter({"b"}), ab = ap.letter({"a", "b"});
  auto A = Atom("a"), B = Atom("b");
  // a R b: b holds until and including the first a.
  CHECK(lasso_satisfies(Release(A, B), ap, {b, ab}, {none}));
  CHECK_FALSE(lasso_satisfies(Release(A, B), ap, {b, a}, {none}));
  CHECK(lasso_satisfies(Release(A, B), ap, {}, {b}));
  CHECK(lasso_satisfies(WeakUntil(A, B), ap, {}, {a}));
  CHECK_FALSE(lasso_satisfies(WeakUntil(A, B), ap, {a}, {none}));
  // Evaluation is per position; suffixes in the cycle agree with rotation.
  LassoEvaluator ev(Until(A, B), ap);
  auto vals = ev.evaluate({none}, {a, a, b});
  CHECK(vals == std::vector<std::uint8_t>{0, 1, 1, 1});
}
