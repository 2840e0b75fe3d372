#include "doctest.h"
#include "ltlshield/monitor/lasso.hpp"
#include "ltlshield/monitor/nba.hpp"
#include "support/random_formula.hpp"

using namespace ltlshield;
using namespace ltlshield::monitor;

namespace {

Nba nba_of(const Formula& f, const Alphabet& ap) { return formula_to_nba(to_nnf(f), ap); }

}  // namespace

TEST_CASE("NBA(F a) accepts {a}·∅^ω") {
  Alphabet ap({"a"});
  auto nba = nba_of(Finally(Atom("a")), ap);
  CHECK(nba.accepts({ap.letter({"a"})}, {Letter{}}));
  CHECK_FALSE(nba.accepts({}, {Letter{}}));
}

TEST_CASE("NBA(false) has empty language") {
  Alphabet ap({"a"});
  auto nba = nba_of(False(), ap);
  CHECK(nba.initial().empty());
  for (const auto& w : testing::all_words(ap.letters(), 0, 2)) {
    CHECK_FALSE(nba.accepts(w, {Letter{}}));
    CHECK_FALSE(nba.accepts(w, {ap.letter({"a"})}));
  }
  CHECK(live_states(nba) == std::vector<bool>(nba.size(), false));
}

TEST_CASE("NBA(G a) rejects every lasso containing ∅") {
  Alphabet ap({"a"});
  auto nba = nba_of(Globally(Atom("a")), ap);
  const Letter a = ap.letter({"a"});
  CHECK(nba.accepts({}, {a}));
  for (const auto& u : testing::all_words(ap.letters(), 0, 2)) {
    for (const auto& v : testing::all_words(ap.letters(), 1, 3)) {
      bool has_empty = false;
      for (auto l : u) has_empty |= l == Letter{};
      for (auto l : v) has_empty |= l == Letter{};
      CHECK(nba.accepts(u, v) == !has_empty);
    }
  }
  auto live = live_states(nba);
  for (auto s : nba.initial()) CHECK(live[s]);
}

TEST_CASE("live_states: dead ends and non-accepting cycles are not live") {
  Alphabet ap({"a"});
  // 0 -> 1 (dead end), 0 -> 2 (cycle without acceptance), 3 accepting self-loop
  std::vector<NbaState> states(4);
  states[0].successors = {1, 2};
  states[2].successors = {2};
  states[3].successors = {3};
  states[3].accepting = true;
  states[1].accepting = true;
  Nba nba(ap, states, {0});
  CHECK(live_states(nba) == std::vector<bool>{false, false, false, true});
}

TEST_CASE("NBA language matches the lasso oracle on random formulas") {
  Alphabet ap({"a", "b"});
  testing::FormulaGenerator gen({"a", "b"}, 2024);
  const auto us = testing::all_words(ap.letters(), 0, 2);
  const auto vs = testing::all_words(ap.letters(), 1, 2);
  for (int i = 0; i < 60; ++i) {
    auto f = gen.next(6);
    auto nba = nba_of(f, ap);
    LassoEvaluator oracle(f, ap);
    auto live = live_states(nba);
    bool any_accepted = false;
    for (const auto& u : us) {
      for (const auto& v : vs) {
        bool expected = oracle.satisfies(u, v);
        any_accepted |= expected;
        INFO("formula " << f.to_string());
        CHECK(nba.accepts(u, v) == expected);
      }
    }
    if (any_accepted) {
      bool live_initial = false;
      for (auto s : nba.initial()) live_initial |= live[s];
      CHECK(live_initial);
    }
  }
}
