#pragma once

#include <optional>
#include <vector>

#include "ltlshield/reach/box.hpp"

namespace ltlshield::reach {

/// aᵀx ≤ b, or aᵀx < b when strict.
struct HalfSpace {
  Vec a;
  double b = 0.0;
  bool strict = false;

  bool contains(const Vec& x) const;
  /// Largest / smallest value of aᵀx over the box.
  double max_over(const Box& box) const;
  double min_over(const Box& box) const;

  friend bool operator==(const HalfSpace& l, const HalfSpace& r) {
    return l.a == r.a && l.b == r.b && l.strict == r.strict;
  }
};

/// Finite intersection of half-spaces; no constraints means all of ℝⁿ.
class Polyhedron {
 public:
  Polyhedron() = default;
  explicit Polyhedron(std::vector<HalfSpace> constraints);

  const std::vector<HalfSpace>& constraints() const noexcept { return constraints_; }
  bool trivial() const noexcept { return constraints_.empty(); }
  bool contains(const Vec& x) const;

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

 private:
  std::vector<HalfSpace> constraints_;
};

/// Exact for boxes: every constraint is checked at its maximizing vertex.
bool box_in_polyhedron(const Box& x, const Polyhedron& p);

/// Bounding box of box ∩ half-space / polyhedron, or nullopt when the
/// intersection is empty. Strict constraints clip to the closed bound.
std::optional<Box> clip(const Box& box, const HalfSpace& h);
std::optional<Box> clip(const Box& box, const Polyhedron& p);

/// Vertices of the bounded polytope box ∩ p (strict constraints closed),
/// found by solving every n-subset of active constraints. Meant for small n.
std::vector<Vec> vertices(const Box& box, const Polyhedron& p);

}  // namespace ltlshield::reach
