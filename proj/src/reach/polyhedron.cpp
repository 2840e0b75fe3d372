#include "ltlshield/reach/polyhedron.hpp"

#include <algorithm>
#include <cmath>

#include "ltlshield/errors.hpp"

namespace ltlshield::reach {
namespace {

// Zero coefficients are skipped so infinite bounds never produce 0 * inf.
double extreme(const Vec& a, const Box& box, bool maximize) {
  if (a.size() != box.lo.size()) throw DimensionError("half-space and box dimensions differ");
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double ai = a(i);
    if (ai == 0.0) continue;
    s += ai * ((ai > 0.0) == maximize ? box.hi(i) : box.lo(i));
  }
  return s;
}

}  // namespace

bool HalfSpace::contains(const Vec& x) const {
  if (x.size() != a.size()) throw DimensionError("half-space and point dimensions differ");
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != 0.0) s += a(i) * x(i);
  }
  return strict ? s < b : s <= b;
}

double HalfSpace::max_over(const Box& box) const { return extreme(a, box, true); }
double HalfSpace::min_over(const Box& box) const { return extreme(a, box, false); }

Polyhedron::Polyhedron(std::vector<HalfSpace> constraints) : constraints_(std::move(constraints)) {
  for (const auto& h : constraints_) {
    if (h.a.size() != constraints_.front().a.size()) throw DimensionError("polyhedron constraints differ in dimension");
  }
}

bool Polyhedron::contains(const Vec& x) const {
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const HalfSpace& h) { return h.contains(x); });
}

bool box_in_polyhedron(const Box& x, const Polyhedron& p) {
  for (const auto& h : p.constraints()) {
    const double m = h.max_over(x);
    if (h.strict ? !(m < h.b) : !(m <= h.b)) return false;
  }
  return true;
}

std::optional<Box> clip(const Box& box, const HalfSpace& h) {
  const double lowest = h.min_over(box);
  if (h.strict ? lowest >= h.b : lowest > h.b) return std::nullopt;
  Box out = box;
  for (Eigen::Index i = 0; i < h.a.size(); ++i) {
    const double ai = h.a(i);
    if (ai == 0.0) continue;
    double rest = 0.0;
    for (Eigen::Index j = 0; j < h.a.size(); ++j) {
      if (j == i || h.a(j) == 0.0) continue;
      rest += h.a(j) * (h.a(j) > 0.0 ? box.lo(j) : box.hi(j));
    }
    const double bound = (h.b - rest) / ai;
    if (ai > 0.0) {
      out.hi(i) = std::min(out.hi(i), bound);
    } else {
      out.lo(i) = std::max(out.lo(i), bound);
    }
    // Rounding can cross the bounds by an ulp when the box barely touches h.
    if (out.hi(i) < out.lo(i)) {
      if (ai > 0.0) {
        out.hi(i) = out.lo(i);
      } else {
        out.lo(i) = out.hi(i);
      }
    }
  }
  return out;
}

std::optional<Box> clip(const Box& box, const Polyhedron& p) {
  std::optional<Box> out = box;
  // Two sweeps: a later constraint can tighten bounds an earlier one used.
  for (int pass = 0; pass < 2 && out; ++pass) {
    for (const auto& h : p.constraints()) {
      out = clip(*out, h);
      if (!out) break;
    }
  }
  return out;
}

}  // namespace ltlshield::reach

namespace ltlshield::reach {

std::vector<Vec> vertices(const Box& box, const Polyhedron& p) {
  if (!box.bounded()) throw Error("vertex enumeration needs a bounded box");
  const auto n = static_cast<Eigen::Index>(box.dim());
  std::vector<HalfSpace> hs;
  for (Eigen::Index i = 0; i < n; ++i) {
    Vec e = Vec::Zero(n);
    e(i) = 1.0;
    hs.push_back({e, box.hi(i), false});
    hs.push_back({-e, -box.lo(i), false});
  }
  for (const auto& h : p.constraints()) hs.push_back({h.a, h.b, false});

  const double tol = 1e-9;
  auto feasible = [&](const Vec& x) {
    for (const auto& h : hs) {
      if (h.a.dot(x) > h.b + tol * (1.0 + std::abs(h.b))) return false;
    }
    return true;
  };

  std::vector<Vec> out;
  const auto m = static_cast<Eigen::Index>(hs.size());
  std::vector<Eigen::Index> pick(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) pick[static_cast<std::size_t>(i)] = i;
  if (n > m) return out;
  while (true) {
    Mat M(n, n);
    Vec rhs(n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto& h = hs[static_cast<std::size_t>(pick[static_cast<std::size_t>(r)])];
      M.row(r) = h.a.transpose();
      rhs(r) = h.b;
    }
    Eigen::FullPivLU<Mat> lu(M);
    if (lu.isInvertible()) {
      Vec x = lu.solve(rhs);
      x = x.cwiseMax(box.lo).cwiseMin(box.hi);
      if (feasible(x) && std::none_of(out.begin(), out.end(), [&](const Vec& y) { return (y - x).cwiseAbs().maxCoeff() <= tol; })) {
        out.push_back(x);
      }
    }
    // Next n-combination of constraint indices.
    Eigen::Index k = n - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == m - n + k) --k;
    if (k < 0) break;
    ++pick[static_cast<std::size_t>(k)];
    for (Eigen::Index j = k + 1; j < n; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace ltlshield::reach
