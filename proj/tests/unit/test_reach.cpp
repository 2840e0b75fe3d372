#include <random>

#include "doctest.h"
#include "ltlshield/errors.hpp"
#include "ltlshield/reach/product_set.hpp"
#include "support/case_study.hpp"

using namespace ltlshield;
using namespace ltlshield::reach;
using ltlshield::testing::box;
using ltlshield::testing::half;
using ltlshield::testing::vec;

namespace {

void check_box(const Box& b, std::initializer_list<double> lo, std::initializer_list<double> hi) {
  auto l = vec(lo), h = vec(hi);
  REQUIRE(b.dim() == static_cast<std::size_t>(l.size()));
  for (Eigen::Index i = 0; i < l.size(); ++i) {
    CHECK(b.lo(i) == doctest::Approx(l(i)).epsilon(1e-12));
    CHECK(b.hi(i) == doctest::Approx(h(i)).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("box_step_affine: interval examples") {
  auto dyn = testing::double_integrator(0.0, 0.1);
  auto throttle = ControlLaw::constant(vec({1.0}));
  check_box(box_step_affine(dyn, box({0, 1}, {0.1, 1.2}), throttle, box({0}, {0.1})), {0.25, 1.225}, {0.4, 1.45});

  Vec x = vec({0.3, 0.7});
  auto succ = box_step_affine(dyn, Box::point(x), throttle, box({0.05}, {0.05}));
  CHECK(succ.is_point());
  CHECK(succ.lo == dyn.step(x, vec({1.0}), vec({0.05})));

  auto brake = ControlLaw::constant(vec({-2.0}));
  check_box(box_step_affine(dyn, box({0, 0}, {0, 0.1}), brake, box({0}, {0})), {0, 0}, {0.025, 0});

  CHECK_THROWS_AS(box_step_affine(dyn, box({0}, {1}), throttle, box({0}, {0})), DimensionError);
}

TEST_CASE("box_step_affine: feedback laws") {
  auto dyn = testing::double_integrator(0.0, 0.0);
  // u = -v + 1, unsaturated for v ∈ [0, 1]: closed loop v⁺ = 0.75v + 0.25.
  auto fb = ControlLaw::feedback(Mat{{0.0, -1.0}}, vec({1.0}));
  check_box(box_step_affine(dyn, box({0, 0}, {1, 1}), fb, box({0}, {0})), {0, 0.25}, {1.25, 1.0});
  // Saturated: u = -10v clipped to [-2, 0] for v ∈ [0, 1].
  auto hard = ControlLaw::feedback(Mat{{0.0, -10.0}}, vec({0.0}));
  auto out = box_step_affine(dyn, box({0, 0}, {0, 1}), hard, box({0}, {0}));
  CHECK(out.lo(1) == 0.0);
  CHECK(out.hi(1) == doctest::Approx(1.0));
  CHECK(hard.evaluate(vec({0, 1}), dyn.U)(0) == -2.0);
}

TEST_CASE("split_by_labels: case-study thresholds") {
  testing::CaseStudy cs;
  const auto& ap = cs.ap;
  auto one = split_by_labels(box({0, 0}, {1, 1}), cs.labels);
  REQUIRE(one.size() == 1);
  CHECK(one[0].first == monitor::Letter{});
  CHECK(one[0].second == box({0, 0}, {1, 1}));

  auto four = split_by_labels(box({2.4, 1.8}, {2.7, 2.1}), cs.labels);
  REQUIRE(four.size() == 4);
  CHECK(four[0].first == monitor::Letter{});
  check_box(four[0].second, {2.4, 1.8}, {2.54, 2.0});
  CHECK(four[1].first == ap.letter({"tower"}));
  check_box(four[1].second, {2.54, 1.8}, {2.7, 2.0});
  CHECK(four[2].first == ap.letter({"fast"}));
  check_box(four[2].second, {2.4, 2.0}, {2.54, 2.1});
  CHECK(four[3].first == ap.letter({"tower", "fast"}));
  check_box(four[3].second, {2.54, 2.0}, {2.7, 2.1});

  auto edge = split_by_labels(box({2.54, 0}, {2.6, 1}), cs.labels);
  REQUIRE(edge.size() == 1);
  CHECK(edge[0].first == ap.letter({"tower"}));

  CHECK(cs.labels.label(vec({2.54, 2.0})) == ap.letter({"tower", "fast"}));
  CHECK(cs.labels.label(vec({2.539, 1.99})) == monitor::Letter{});
}

TEST_CASE("box_in_polyhedron and product_in_region") {
  Polyhedron tri({half({0.69, 1.0}, 1.66)});
  CHECK(box_in_polyhedron(box({0, 0}, {0.5, 1}), tri));
  CHECK_FALSE(box_in_polyhedron(box({2, 0}, {2.2, 0.5}), tri));
  CHECK(box_in_polyhedron(box({-100, -100}, {100, 100}), Polyhedron{}));
  Polyhedron strict({half({1.0}, 1.0, true)});
  CHECK_FALSE(box_in_polyhedron(box({0}, {1}), strict));
  CHECK(box_in_polyhedron(box({0}, {0.999}), strict));

  testing::CaseStudy cs;
  CHECK(product_in_region(ProductSet{}, cs.sb));
  CHECK(product_in_region(ProductSet::singleton(cs.q_top, box({0, 0}, {50, 9})), cs.sb));
  CHECK_FALSE(product_in_region(ProductSet::singleton(cs.q_inc, box({2, 0}, {2.2, 0.5})), cs.sb));
  CHECK_FALSE(product_in_region(ProductSet::singleton(cs.q_bot, box({0, 0}, {0, 0})), cs.sb));
}

TEST_CASE("product_step: examples") {
  testing::CaseStudy cs;
  CHECK(product_step(ProductSet{}, cs.dyn, cs.brake, cs.labels, cs.monitor).empty());

  auto r = product_step(ProductSet::singleton(cs.q_inc, box({0, 0}, {0, 0})), cs.dyn, cs.brake, cs.labels,
                        cs.monitor);
  REQUIRE(r.box_count() == 1);
  REQUIRE(r.has(cs.q_inc));
  check_box(r.pieces().at(cs.q_inc)[0], {0, 0}, {0, 0});

  // Coasting into the tower slowly.
  auto coast = ControlLaw::constant(vec({0.0}));
  auto into = product_step(ProductSet::singleton(cs.q_inc, box({2.2, 1.0}, {2.4, 1.2})), cs.dyn, coast, cs.labels,
                           cs.monitor);
  CHECK(into.has(cs.q_bot));
  CHECK(into.has(cs.q_inc));
  CHECK_FALSE(into.has(cs.q_top));
}

TEST_CASE("ProductSet::add drops covered boxes") {
  ProductSet r;
  r.add(0, box({0}, {1}));
  r.add(0, box({0.2}, {0.5}));
  CHECK(r.box_count() == 1);
  r.add(0, box({-1}, {2}));
  CHECK(r.box_count() == 1);
  CHECK(r.pieces().at(0)[0] == box({-1}, {2}));
  r.add(1, box({5}, {6}));
  CHECK(r.box_count() == 2);
  CHECK(r.contains(1, vec({5.5})));
  CHECK_FALSE(r.contains(0, vec({5.5})));
}

TEST_CASE("box_in_polyhedron agrees with vertex enumeration") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 3;
    Vec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
      double a = u(rng), b = u(rng);
      lo(i) = std::min(a, b);
      hi(i) = std::max(a, b);
    }
    std::vector<HalfSpace> hs;
    for (int c = 0; c < 1 + trial % 4; ++c) {
      Vec a(n);
      for (int i = 0; i < n; ++i) a(i) = u(rng);
      hs.push_back({a, u(rng) * 2.0, false});
    }
    Polyhedron p(hs);
    Box b(lo, hi);
    bool all = true;
    for (int mask = 0; mask < (1 << n); ++mask) {
      Vec v(n);
      for (int i = 0; i < n; ++i) v(i) = (mask >> i) & 1 ? hi(i) : lo(i);
      all = all && p.contains(v);
    }
    CHECK(box_in_polyhedron(b, p) == all);
  }
}

TEST_CASE("product_step is exact on points and monotone") {
  testing::CaseStudy cs;
  auto dyn = testing::double_integrator(0.1, 0.1);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(0.0, 3.0), uv(0.0, 2.5), uu(-2.0, 2.0), ud(0.0, 0.2);
  for (int i = 0; i < 500; ++i) {
    Vec x = vec({ux(rng), uv(rng)});
    auto g = ControlLaw::constant(vec({uu(rng)}));
    auto q = cs.q_inc;
    auto r = product_step(ProductSet::singleton(q, Box::point(x)), dyn, g, cs.labels, cs.monitor);
    Vec next = dyn.step(x, g.u, dyn.D.lo);
    auto qn = cs.monitor.step(q, cs.labels.label(next));
    REQUIRE(r.box_count() == 1);
    REQUIRE(r.has(qn));
    const auto& b = r.pieces().at(qn)[0];
    CHECK((b.lo - next).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((b.hi - next).cwiseAbs().maxCoeff() <= 1e-12);
  }

  for (int i = 0; i < 300; ++i) {
    Vec lo = vec({ux(rng), uv(rng)});
    Vec w1 = vec({ud(rng), ud(rng)}), w2 = vec({ud(rng), ud(rng)});
    Box inner(lo, lo + w1);
    Box outer(lo - w2, lo + w1 + w2);
    ControlLaw g = i % 2 ? ControlLaw::constant(vec({uu(rng)}))
                         : ControlLaw::feedback(Mat{{-uu(rng), -2.0 * std::abs(uu(rng))}}, vec({uu(rng)}));
    auto r1 = product_step(ProductSet::singleton(cs.q_inc, inner), cs.dyn, g, cs.labels, cs.monitor);
    auto r2 = product_step(ProductSet::singleton(cs.q_inc, outer), cs.dyn, g, cs.labels, cs.monitor);
    CHECK(product_subset(r1, r2));
  }
}

TEST_CASE("reach tubes contain sampled trajectories") {
  testing::CaseStudy cs;
  const auto& D = cs.dyn.D;
  std::vector<std::vector<ControlLaw>> plans = {
      std::vector<ControlLaw>(8, ControlLaw::constant(vec({2.0}))),
      std::vector<ControlLaw>(8, ControlLaw::feedback(Mat{{-0.5, -1.0}}, vec({2.5}))),
      std::vector<ControlLaw>(8, ControlLaw::constant(vec({0.0}))),
  };
  const Box init = box({1.6, 1.4}, {1.9, 1.7});
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (const auto& plan : plans) {
    std::vector<ProductSet> tube{ProductSet::singleton(cs.q_inc, init)};
    for (const auto& g : plan) tube.push_back(product_step(tube.back(), cs.dyn, g, cs.labels, cs.monitor));
    for (int s = 0; s < 1000; ++s) {
      Vec x = init.lo + (init.hi - init.lo).cwiseProduct(vec({u01(rng), u01(rng)}));
      auto q = cs.q_inc;
      for (std::size_t i = 0; i < plan.size(); ++i) {
        Vec d = D.lo + (D.hi - D.lo) * u01(rng);
        x = cs.dyn.step(x, plan[i].evaluate(x, cs.dyn.U), d);
        q = cs.monitor.step(q, cs.labels.label(x));
        REQUIRE(tube[i + 1].contains(q, x, 1e-9));
      }
    }
  }
}
