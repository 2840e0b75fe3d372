#include <random>

#include "doctest.h"
#include "ltlshield/shield/recovery.hpp"
#include "support/case_study.hpp"

using namespace ltlshield;
using namespace ltlshield::shield;
using ltlshield::testing::vec;

namespace {

const DisturbanceMode kModes[] = {DisturbanceMode::Deterministic, DisturbanceMode::Disturbed};

RecoveryResult search(const ShieldConfig& cfg, const Vec& x, MonitorState q, ProposalSource& src) {
  return cfg.mode == DisturbanceMode::Deterministic ? recovery(x, q, src, cfg) : recovery_d(x, q, src, cfg);
}

}  // namespace

TEST_CASE("braking inside the region recovers in one step") {
  testing::CaseStudy cs;
  for (auto mode : kModes) {
    auto cfg = cs.config(mode);
    ListProposal src(constant_hold(vec({-2.0}), cfg->nmax + 1));
    auto r = search(*cfg, vec({0.5, 1.0}), cs.q_inc, src);
    REQUIRE(r);
    CHECK(r.recovery->laws.size() == 1);
    CHECK(r.recovery->tube.size() == 1);
    CHECK(product_in_region(r.recovery->tube.back(), cfg->sb));
  }
}

TEST_CASE("full throttle: one step from rest, past the tower from outside the region") {
  testing::CaseStudy cs;
  for (auto mode : kModes) {
    auto cfg8 = cs.config(mode, 8);
    // (0, 0.5) is already inside the triangle.
    ListProposal rest(constant_hold(vec({2.0}), 9));
    auto r0 = search(*cfg8, vec({0.0, 0.0}), cs.q_inc, rest);
    REQUIRE(r0);
    CHECK(r0.recovery->laws.size() == 1);

    ListProposal src8(constant_hold(vec({2.0}), 9));
    auto r8 = search(*cfg8, vec({1.0, 1.5}), cs.q_inc, src8);
    REQUIRE(r8);
    CHECK(r8.recovery->laws.size() == 4);
    CHECK(r8.recovery->tube.back().has(cs.q_top));
    CHECK_FALSE(r8.recovery->tube.back().has(cs.q_inc));

    auto cfg2 = cs.config(mode, 2);
    ListProposal src2(constant_hold(vec({2.0}), 3));
    auto r2 = search(*cfg2, vec({1.0, 1.5}), cs.q_inc, src2);
    CHECK_FALSE(r2);
    CHECK(src2.requests() == 3);
  }
}

TEST_CASE("loop guard stops at the bottom state") {
  testing::CaseStudy cs;
  for (auto mode : kModes) {
    auto cfg = cs.config(mode);
    ListProposal src(constant_hold(vec({0.0}), 9));
    auto r = search(*cfg, vec({2.2, 1.2}), cs.q_inc, src);
    CHECK_FALSE(r);
    CHECK(src.requests() == 2);
  }
}

TEST_CASE("faulty proposals") {
  testing::CaseStudy cs;
  for (auto mode : kModes) {
    auto cfg = cs.config(mode);
    ListProposal out_of_bounds(constant_hold(vec({3.0}), 9));
    CHECK_FALSE(search(*cfg, vec({0.0, 0.0}), cs.q_inc, out_of_bounds));

    ListProposal empty({});
    CHECK_FALSE(search(*cfg, vec({0.0, 0.0}), cs.q_inc, empty));

    // Declared domain x ≤ -0.5 excludes the current state.
    auto narrow = reach::ControlLaw::constant(vec({-2.0}), reach::Polyhedron({testing::half({1, 0}, -0.5)}));
    ListProposal outside({narrow});
    auto r = search(*cfg, vec({0.0, 0.0}), cs.q_inc, outside);
    CHECK_FALSE(r);
    CHECK(r.reason.find("domain") != std::string::npos);

    // A short stream is a fault, not an error.
    ListProposal short_plan(constant_hold(vec({2.0}), 2));
    auto r_short = search(*cfg, vec({1.0, 1.5}), cs.q_inc, short_plan);
    CHECK_FALSE(r_short);
    CHECK(r_short.reason.find("ended") != std::string::npos);
  }
}

TEST_CASE("deterministic search needs a point disturbance") {
  testing::CaseStudy cs;
  auto cfg = cs.config(DisturbanceMode::Disturbed);
  ListProposal src(constant_hold(vec({-2.0}), 9));
  CHECK_THROWS_AS(recovery(vec({0.0, 0.0}), cs.q_inc, src, *cfg), Error);
}

TEST_CASE("point and reach-set searches agree on point disturbances") {
  testing::CaseStudy cs;
  auto det = cs.config(DisturbanceMode::Deterministic);
  auto dis = cs.config(DisturbanceMode::Deterministic);
  dis->mode = DisturbanceMode::Disturbed;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(0.0, 2.4), uv(0.0, 2.0), uu(-2.0, 2.0);
  int found = 0;
  for (int i = 0; i < 400; ++i) {
    Vec x = vec({ux(rng), uv(rng)});
    auto q = cs.monitor.step(cs.q_inc, cs.labels.label(x));
    if (q == cs.q_bot) continue;
    std::vector<reach::ControlLaw> plan;
    for (int k = 0; k < 9; ++k) plan.push_back(reach::ControlLaw::constant(vec({uu(rng)})));
    ListProposal a(plan), b(plan);
    auto ra = recovery(x, q, a, *det);
    auto rb = recovery_d(x, q, b, *dis);
    REQUIRE(ra.recovery.has_value() == rb.recovery.has_value());
    if (ra) {
      ++found;
      CHECK(ra.recovery->laws == rb.recovery->laws);
      CHECK(ra.recovery->tube == rb.recovery->tube);
    }
  }
  CHECK(found > 10);
}
