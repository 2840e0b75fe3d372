#include "ltlshield/reach/dynamics.hpp"

#include <algorithm>
#include <optional>

#include <fmt/format.h>

#include "ltlshield/errors.hpp"

namespace ltlshield::reach {
namespace {

struct Interval {
  double lo, hi;
};

Interval scale(double a, double lo, double hi) {
  if (a >= 0.0) return {a * lo, a * hi};
  return {a * hi, a * lo};
}

// out += M · [lo, hi], accumulated column by column in index order. The point
// simulator uses the same order so degenerate boxes reproduce it exactly.
void accumulate(const Mat& M, const Vec& lo, const Vec& hi, Vec& out_lo, Vec& out_hi) {
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      const double a = M(i, j);
      if (a == 0.0) continue;
      auto [l, h] = scale(a, lo(j), hi(j));
      out_lo(i) += l;
      out_hi(i) += h;
    }
  }
}

void clamp_into(const Box& clamp, Vec& lo, Vec& hi) {
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    lo(i) = std::clamp(lo(i), clamp.lo(i), clamp.hi(i));
    hi(i) = std::clamp(hi(i), clamp.lo(i), clamp.hi(i));
  }
}

}  // namespace

void AffineDynamics::validate() const {
  const auto n_ = A.rows();
  if (A.cols() != n_) throw DimensionError("A must be square");
  if (B.rows() != n_) throw DimensionError("B must have as many rows as A");
  if (E.rows() != n_) throw DimensionError("E must have as many rows as A");
  if (c.size() != n_) throw DimensionError("c must have the state dimension");
  if (U.lo.size() != B.cols()) throw DimensionError("U must have the input dimension");
  if (D.lo.size() != E.cols()) throw DimensionError("D must have the disturbance dimension");
  if (clamp.lo.size() != n_) throw DimensionError("clamp must have the state dimension");
}

Vec AffineDynamics::step(const Vec& x, const Vec& u, const Vec& d) const {
  if (x.size() != A.cols() || u.size() != B.cols() || d.size() != E.cols()) {
    throw DimensionError("step arguments do not match the dynamics");
  }
  Vec lo = Vec::Zero(A.rows());
  Vec hi = Vec::Zero(A.rows());
  accumulate(A, x, x, lo, hi);
  accumulate(B, u, u, lo, hi);
  accumulate(E, d, d, lo, hi);
  lo += c;
  clamp_into(clamp, lo, lo);
  return lo;
}

ControlLaw ControlLaw::constant(Vec u, Polyhedron domain) {
  ControlLaw g;
  g.kind = Kind::Constant;
  g.u = std::move(u);
  g.domain = std::move(domain);
  return g;
}

ControlLaw ControlLaw::feedback(Mat K, Vec k, Polyhedron domain) {
  if (K.rows() != k.size()) throw DimensionError("feedback gain and offset differ in dimension");
  ControlLaw g;
  g.kind = Kind::Feedback;
  g.K = std::move(K);
  g.k = std::move(k);
  g.domain = std::move(domain);
  return g;
}

Vec ControlLaw::evaluate(const Vec& x, const Box& U) const {
  if (kind == Kind::Constant) return u;
  if (K.cols() != x.size()) throw DimensionError("feedback gain does not match the state dimension");
  Vec out = K * x + k;
  return out.cwiseMax(U.lo).cwiseMin(U.hi);
}

std::string describe(const ControlLaw& g) {
  auto vec = [](const Vec& v) {
    std::string s = "[";
    for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt::format("{}", v(i));
    return s + "]";
  };
  if (g.kind == ControlLaw::Kind::Constant) return "const " + vec(g.u);
  std::string s = "feedback K=[";
  for (Eigen::Index i = 0; i < g.K.rows(); ++i) s += (i ? "; " : "") + vec(g.K.row(i).transpose());
  return s + "] k=" + vec(g.k);
}

Box box_step_affine(const AffineDynamics& dyn, const Box& x_box, const ControlLaw& g, const Box& d_box) {
  const auto n = dyn.A.rows();
  if (x_box.lo.size() != n) throw DimensionError("state box does not match the dynamics");
  if (d_box.lo.size() != dyn.E.cols()) throw DimensionError("disturbance box does not match the dynamics");
  Vec lo = Vec::Zero(n);
  Vec hi = Vec::Zero(n);

  if (g.kind == ControlLaw::Kind::Constant) {
    if (g.u.size() != dyn.B.cols()) throw DimensionError("constant input does not match the dynamics");
    accumulate(dyn.A, x_box.lo, x_box.hi, lo, hi);
    accumulate(dyn.B, g.u, g.u, lo, hi);
  } else {
    if (g.K.rows() != dyn.B.cols() || g.K.cols() != n) throw DimensionError("feedback gain does not match the dynamics");
    Vec ulo = g.k, uhi = g.k;
    accumulate(g.K, x_box.lo, x_box.hi, ulo, uhi);
    const bool inside = (ulo.array() >= dyn.U.lo.array()).all() && (uhi.array() <= dyn.U.hi.array()).all();
    if (inside) {
      // No saturation anywhere on the box: use the closed loop so x and u stay correlated.
      Mat closed = dyn.A + dyn.B * g.K;
      Vec offset = dyn.B * g.k;
      accumulate(closed, x_box.lo, x_box.hi, lo, hi);
      lo += offset;
      hi += offset;
    } else {
      ulo = ulo.cwiseMax(dyn.U.lo).cwiseMin(dyn.U.hi);
      uhi = uhi.cwiseMax(dyn.U.lo).cwiseMin(dyn.U.hi);
      accumulate(dyn.A, x_box.lo, x_box.hi, lo, hi);
      accumulate(dyn.B, ulo, uhi, lo, hi);
    }
  }
  accumulate(dyn.E, d_box.lo, d_box.hi, lo, hi);
  lo += dyn.c;
  hi += dyn.c;
  clamp_into(dyn.clamp, lo, hi);
  return Box(lo, hi);
}

}  // namespace ltlshield::reach

namespace ltlshield::reach {

Box polytope_step_affine(const AffineDynamics& dyn, const std::vector<Vec>& vertices, const ControlLaw& g,
                         const Box& d_box) {
  if (vertices.empty()) throw Error("polytope has no vertices");
  Box hull_box = Box::point(vertices.front());
  for (const auto& v : vertices) hull_box = hull(hull_box, Box::point(v));

  bool affine = g.kind == ControlLaw::Kind::Constant;
  if (!affine) {
    affine = std::all_of(vertices.begin(), vertices.end(), [&](const Vec& v) {
      Vec u = g.K * v + g.k;
      return (u.array() >= dyn.U.lo.array()).all() && (u.array() <= dyn.U.hi.array()).all();
    });
  }
  if (!affine) return box_step_affine(dyn, hull_box, g, d_box);

  // Affine in (x, d) and clamp is monotone per dimension, so the image's
  // extremes sit at vertex pairs.
  const auto p = d_box.lo.size();
  std::optional<Box> out;
  for (const auto& v : vertices) {
    const Vec u = g.kind == ControlLaw::Kind::Constant ? g.u : Vec(g.K * v + g.k);
    for (Eigen::Index mask = 0; mask < (Eigen::Index{1} << p); ++mask) {
      Vec d(p);
      for (Eigen::Index j = 0; j < p; ++j) d(j) = (mask >> j) & 1 ? d_box.hi(j) : d_box.lo(j);
      Box y = Box::point(dyn.step(v, u, d));
      out = out ? hull(*out, y) : y;
    }
  }
  return *out;
}

}  // namespace ltlshield::reach
