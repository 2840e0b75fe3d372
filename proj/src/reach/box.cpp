#include "ltlshield/reach/box.hpp"

#include <limits>

#include <fmt/format.h>

#include "ltlshield/errors.hpp"

namespace ltlshield::reach {

Box::Box(Vec lo_, Vec hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size()) throw DimensionError("box bounds have different dimensions");
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (!(lo(i) <= hi(i))) throw Error(fmt::format("box has lo > hi in dimension {}", i));
  }
}

Box Box::unbounded(std::size_t n) {
  const double inf = std::numeric_limits<double>::infinity();
  return Box(Vec::Constant(static_cast<Eigen::Index>(n), -inf), Vec::Constant(static_cast<Eigen::Index>(n), inf));
}

bool Box::bounded() const { return lo.allFinite() && hi.allFinite(); }

bool Box::contains(const Vec& x, double tol) const {
  if (x.size() != lo.size()) throw DimensionError("point and box dimensions differ");
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) < lo(i) - tol || x(i) > hi(i) + tol) return false;
  }
  return true;
}

bool Box::contains(const Box& other) const {
  if (other.dim() != dim()) throw DimensionError("box dimensions differ");
  return (lo.array() <= other.lo.array()).all() && (other.hi.array() <= hi.array()).all();
}

bool Box::intersects(const Box& other) const {
  if (other.dim() != dim()) throw DimensionError("box dimensions differ");
  return (lo.array() <= other.hi.array()).all() && (other.lo.array() <= hi.array()).all();
}

Box hull(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) throw DimensionError("box dimensions differ");
  return Box(a.lo.cwiseMin(b.lo), a.hi.cwiseMax(b.hi));
}

std::string format(const Box& b) {
  std::string out = "[";
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (i) out += " x ";
    out += fmt::format("[{}, {}]", b.lo(static_cast<Eigen::Index>(i)), b.hi(static_cast<Eigen::Index>(i)));
  }
  return out + "]";
}

}  // namespace ltlshield::reach
