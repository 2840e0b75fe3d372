#include <set>

#include "doctest.h"
#include "ltlshield/monitor/lasso.hpp"
#include "ltlshield/monitor/parser.hpp"
#include "ltlshield/monitor/safety.hpp"
#include "support/random_formula.hpp"

using namespace ltlshield;
using namespace ltlshield::monitor;

TEST_CASE("classify_safety: reference formulas") {
  Alphabet a({"a"});
  Alphabet tf({"t", "f"});
  CHECK(classify_safety(parse_formula("G a", a), a) == SafetyClass::Safety);
  CHECK(classify_safety(parse_formula("F a", a), a) == SafetyClass::NotSafety);
  CHECK(classify_safety(parse_formula("G F a", a), a) == SafetyClass::NotSafety);
  CHECK(classify_safety(parse_formula("G !a | X a", a), a) == SafetyClass::Safety);
  CHECK(classify_safety(parse_formula("(!t) U (t & f)", tf), tf) == SafetyClass::NotSafety);
  CHECK(classify_safety(parse_formula("(!t) W (t & f)", tf), tf) == SafetyClass::Safety);
  CHECK(classify_safety(True(), a) == SafetyClass::Safety);
  CHECK(classify_safety(False(), a) == SafetyClass::Safety);
  CHECK(classify_safety(parse_formula("X a", a), a) == SafetyClass::Safety);
  // Settled within three letters: X a | (a & X X a).
  CHECK(classify_safety(parse_formula("a U X a", a), a) == SafetyClass::Safety);
  Alphabet ab({"a", "b"});
  CHECK(classify_safety(parse_formula("a U b", ab), ab) == SafetyClass::NotSafety);
  CHECK(classify_safety(parse_formula("a W b", ab), ab) == SafetyClass::Safety);
  CHECK(classify_safety(parse_formula("a R b", ab), ab) == SafetyClass::Safety);
}

namespace {

// Whether the monitor avoids ⊥ on every prefix of prefix·cycle^ω.
bool run_avoids_bottom(const Monitor& m, const Word& prefix, const Word& cycle) {
  auto q = m.initial();
  if (m.is_bottom(q)) return false;
  for (auto l : prefix) {
    q = m.step(q, l);
    if (m.is_bottom(q)) return false;
  }
  std::set<MonitorState> cycle_starts;
  while (cycle_starts.insert(q).second) {
    for (auto l : cycle) {
      q = m.step(q, l);
      if (m.is_bottom(q)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("safety formulas: a bottom-free run implies satisfaction") {
  Alphabet ap({"a", "b"});
  testing::FormulaGenerator gen({"a", "b"}, 31337);
  const auto prefixes = testing::all_words(ap.letters(), 0, 3);
  const auto cycles = testing::all_words(ap.letters(), 1, 2);
  int safety_seen = 0;
  for (int i = 0; i < 80; ++i) {
    auto f = gen.next(6);
    auto m = build_monitor(f, ap);
    auto cls = classify_safety(f, m);
    LassoEvaluator oracle(f, ap);
    bool counterexample = false;
    for (const auto& p : prefixes) {
      for (const auto& c : cycles) {
        if (run_avoids_bottom(m, p, c) && !oracle.satisfies(p, c)) counterexample = true;
      }
    }
    INFO("formula " << f.to_string());
    if (cls == SafetyClass::Safety) {
      ++safety_seen;
      CHECK_FALSE(counterexample);
    }
    // A bounded counterexample proves the formula is not safety.
    if (counterexample) CHECK(cls == SafetyClass::NotSafety);
  }
  CHECK(safety_seen > 10);
}
