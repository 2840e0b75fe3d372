#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ltlshield/sim/disturbance.hpp"
#include "ltlshield/sim/driver.hpp"
#include "ltlshield/sim/simulate.hpp"
#include "ltlshield/sim/trace.hpp"

using namespace ltlshield;
using namespace ltlshield::sim;

namespace {

Vec vec1(double x) { return Vec::Constant(1, x); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("delorean scenario parameters") {
  auto sc = delorean_scenario("faulty-late");
  CHECK(sc.dynamics.A(0, 1) == 0.25);
  CHECK(sc.dynamics.B(1, 0) == 0.25);
  CHECK(sc.formula == "(!tower) W (tower & fast)");
  CHECK(sc.x0 == Vec::Zero(2));
  CHECK(sc.nmax == 8);
  CHECK(sc.driver.name == "faulty-late");
  bool tower_at = false;
  for (const auto& l : sc.labels) {
    for (const auto& h : l.region.constraints()) tower_at |= std::abs(h.b) == 2.54;
  }
  CHECK(tower_at);
  REQUIRE(sc.sb.size() == 2);
  CHECK(sc.sb[1].first == "q0");
  CHECK(sc.sb[1].second.constraints()[0].a(0) == 0.69);
  CHECK(sc.sb[1].second.constraints()[0].b == 1.66);
  CHECK_THROWS_AS(delorean_scenario("reckless"), Error);
}

TEST_CASE("scenario documents round-trip") {
  for (std::string profile : {"safe", "faulty-late", "full-throttle"}) {
    auto sc = delorean_scenario(profile);
    auto text = scenario_text(sc);
    CHECK(to_json(parse_scenario(text)) == to_json(sc));
  }
  auto replay = delorean_scenario("safe");
  replay.driver.name = "replay";
  replay.driver.inputs = {vec1(1.0), vec1(-0.5)};
  CHECK(to_json(parse_scenario(scenario_text(replay))) == to_json(replay));
}

TEST_CASE("shipped scenario file matches the built-in case study") {
  auto text = read_file(LTLSHIELD_SOURCE_DIR "/scenarios/delorean.json");
  REQUIRE_FALSE(text.empty());
  CHECK(to_json(parse_scenario(text)) == to_json(delorean_scenario("faulty-late")));
}

TEST_CASE("scenario errors carry context") {
  try {
    parse_scenario("{\n  \"name\": \"x\",\n  \"nmax\": ,\n}");
    FAIL("expected ScenarioError");
  } catch (const ScenarioError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  auto j = to_json(delorean_scenario("safe"));
  j["dynamics"].erase("A");
  try {
    scenario_from_json(j);
    FAIL("expected ScenarioError");
  } catch (const ScenarioError& e) {
    CHECK(std::string(e.what()).find("/dynamics/A") != std::string::npos);
  }
  auto bad_state = delorean_scenario("safe");
  bad_state.sb[1].first = "q7";
  CHECK_THROWS_AS(build_config(bad_state), ScenarioError);
}

TEST_CASE("disturbance strategies") {
  Box D(vec1(0.0), vec1(0.2));
  DisturbanceSampler zero(Strategy::Zero, D, 1);
  for (int i = 0; i < 5; ++i) CHECK(zero.draw()(0) == doctest::Approx(0.1));

  DisturbanceSampler extreme(Strategy::Extreme, D, 1, vec1(1.0));
  for (int i = 0; i < 50; ++i) {
    double d = extreme.draw()(0);
    CHECK((d == 0.0 || d == 0.2));
  }

  DisturbanceSampler a(Strategy::Uniform, D, 42), b(Strategy::Uniform, D, 42), c(Strategy::Uniform, D, 43);
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    auto x = a.draw();
    CHECK(x == b.draw());
    CHECK(D.contains(x));
    differs |= x != c.draw();
  }
  CHECK(differs);
  CHECK_THROWS_AS(parse_strategy("gaussian"), Error);
}

TEST_CASE("drivers") {
  auto sc = delorean_scenario("faulty-late");
  auto late = make_driver(sc.driver, sc.dynamics);
  CHECK(late->propose(0, sc.x0, 9).size() == 9);
  CHECK(late->propose(3, sc.x0, 9)[0].u(0) == 2.0);
  CHECK(late->propose(4, sc.x0, 9)[0].u(0) == 0.0);

  auto safe = make_driver(delorean_scenario("safe").driver, sc.dynamics);
  CHECK(safe->propose(0, Vec::Zero(2), 9)[0].u(0) == 1.0);
  Vec fast(2);
  fast << 1.0, 1.5;
  CHECK(safe->propose(0, fast, 9)[0].u(0) == -2.0);

  DriverSpec replay;
  replay.name = "replay";
  replay.inputs = {vec1(1.0), vec1(-1.0), vec1(0.5)};
  auto r = make_driver(replay, sc.dynamics);
  auto p = r->propose(1, sc.x0, 4);
  CHECK(p[0].u(0) == -1.0);
  CHECK(p[1].u(0) == 0.5);
  CHECK(p[3].u(0) == 0.5);

  DriverSpec external;
  external.name = "external";
  CHECK_THROWS_AS(make_driver(external, sc.dynamics), Error);
}

TEST_CASE("safe driver never reaches bottom") {
  auto sc = delorean_scenario("safe");
  auto cfg = build_config(sc);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto t = simulate(sc, cfg, {seed, 200, true});
    CHECK_FALSE(t.summary.bottom_reached);
    CHECK(t.records.size() == 200);
    CHECK(check_trace(t, cfg->monitor) != monitor::Verdict::Bottom);
  }
}

TEST_CASE("faulty-late driver: shield makes the tower pass fast") {
  auto sc = delorean_scenario("faulty-late");
  auto cfg = build_config(sc);
  for (std::string strategy : {"uniform", "extreme", "zero"}) {
    sc.strategy = strategy;
    std::size_t unshielded_bottom = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      auto t = simulate(sc, cfg, {seed, 200, true});
      CHECK_FALSE(t.summary.bottom_reached);
      REQUIRE(t.summary.crossing_tick);
      CHECK((*t.summary.crossing_state)(1) >= 2.0);
      CHECK(t.summary.faults >= 1);
      CHECK(check_trace(t, cfg->monitor) == monitor::Verdict::Top);
      for (const auto& r : t.records) CHECK(sc.dynamics.D.contains(r.d));

      auto raw = simulate(sc, cfg, {seed, 200, false});
      unshielded_bottom += raw.summary.bottom_reached;
      if (raw.summary.bottom_reached) CHECK(check_trace(raw, cfg->monitor) == monitor::Verdict::Bottom);
    }
    CHECK(unshielded_bottom >= 1);
  }
}

TEST_CASE("check_trace") {
  auto sc = delorean_scenario("safe");
  auto cfg = build_config(sc);
  // Standing still: every letter is ∅.
  sc.driver.name = "replay";
  sc.driver.inputs = {vec1(0.0)};
  auto still = simulate(sc, cfg, {0, 20, true});
  for (const auto& r : still.records) CHECK(r.letter == monitor::Letter{});
  CHECK(check_trace(still, cfg->monitor) == monitor::Verdict::Inconclusive);

  auto tampered = still;
  tampered.records[5].q = *cfg->monitor.top();
  CHECK_THROWS_AS(check_trace(tampered, cfg->monitor), TraceMismatch);

  auto late = delorean_scenario("faulty-late");
  auto raw = simulate(late, cfg, {0, 40, false});
  REQUIRE(raw.summary.crossing_tick);
  CHECK(raw.records[*raw.summary.crossing_tick].letter == cfg->monitor.alphabet().letter({"tower"}));
  CHECK(check_trace(raw, cfg->monitor) == monitor::Verdict::Bottom);
}

TEST_CASE("traces are reproducible and exportable") {
  auto sc = delorean_scenario("faulty-late");
  auto a = simulate(sc, {7, 60, true});
  auto b = simulate(sc, {7, 60, true});
  CHECK(trace_csv(a) == trace_csv(b));
  CHECK(trace_json(a).dump() == trace_json(b).dump());
  auto c = simulate(sc, {8, 60, true});
  CHECK(trace_csv(a) != trace_csv(c));

  auto csv = trace_csv(a);
  CHECK(csv.rfind("tick,x0,x1,q,letter,mode,verdict,u0,d0\n", 0) == 0);
  std::size_t rows = 0;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) rows += !line.empty() && line[0] != '#' && line[0] != 't';
  CHECK(rows == 60);
  CHECK(csv.find("# crossing_tick: ") != std::string::npos);
  auto j = trace_json(a);
  CHECK(j["records"].size() == 60);
  CHECK(j["summary"]["bottom_reached"] == false);
}
