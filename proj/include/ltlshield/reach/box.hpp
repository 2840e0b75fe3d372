#pragma once

#include <cstddef>
#include <string>

#include <Eigen/Dense>

namespace ltlshield::reach {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Axis-aligned box, closed in every dimension. Bounds may be infinite.
struct Box {
  Vec lo;
  Vec hi;

  Box() = default;
  Box(Vec lo_, Vec hi_);  // throws DimensionError / Error on lo > hi

  static Box point(const Vec& x) { return Box(x, x); }
  static Box unbounded(std::size_t n);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(lo.size()); }
  bool bounded() const;
  bool is_point() const { return lo == hi; }
  Vec center() const { return (lo + hi) / 2.0; }

  bool contains(const Vec& x, double tol = 0.0) const;
  bool contains(const Box& other) const;
  bool intersects(const Box& other) const;

  friend bool operator==(const Box& a, const Box& b) { return a.lo == b.lo && a.hi == b.hi; }
};

Box hull(const Box& a, const Box& b);

std::string format(const Box& b);

}  // namespace ltlshield::reach
