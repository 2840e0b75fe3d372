#pragma once

#include <string>
#include <vector>

#include "ltlshield/reach/polyhedron.hpp"

namespace ltlshield::reach {

/// x⁺ = clamp(A x + B u + E d + c) with u ∈ U, d ∈ D.
struct AffineDynamics {
  Mat A, B, E;
  Vec c;
  Box U;
  Box D;
  Box clamp;  // per-dimension state clamp; infinite bounds mean none

  std::size_t n() const noexcept { return static_cast<std::size_t>(A.rows()); }
  std::size_t m() const noexcept { return static_cast<std::size_t>(B.cols()); }
  std::size_t p() const noexcept { return static_cast<std::size_t>(E.cols()); }

  /// Throws DimensionError on inconsistent shapes.
  void validate() const;
  bool deterministic() const { return D.is_point(); }

  Vec step(const Vec& x, const Vec& u, const Vec& d) const;
};

/// Either a constant input or a saturated affine feedback u = sat_U(Kx + k),
/// declared valid on `domain`.
struct ControlLaw {
  enum class Kind { Constant, Feedback };

  Kind kind = Kind::Constant;
  Vec u;  // Constant
  Mat K;  // Feedback
  Vec k;
  Polyhedron domain;

  static ControlLaw constant(Vec u, Polyhedron domain = {});
  static ControlLaw feedback(Mat K, Vec k, Polyhedron domain = {});

  Vec evaluate(const Vec& x, const Box& U) const;

  friend bool operator==(const ControlLaw& a, const ControlLaw& b) {
    return a.kind == b.kind && a.u == b.u && a.K == b.K && a.k == b.k && a.domain == b.domain;
  }
};

std::string describe(const ControlLaw& g);

/// Interval over-approximation of {clamp(Ax + Bg(x) + Ed + c) : x ∈ x_box, d ∈ d_box}.
Box box_step_affine(const AffineDynamics& dyn, const Box& x_box, const ControlLaw& g, const Box& d_box);

/// Bounding box of the image of a polytope given by its vertices. Tight when g
/// is affine on the polytope (constant, or feedback that never saturates
/// there); otherwise falls back to box_step_affine on the vertex hull.
Box polytope_step_affine(const AffineDynamics& dyn, const std::vector<Vec>& vertices, const ControlLaw& g,
                         const Box& d_box);

}  // namespace ltlshield::reach
