#pragma once

#include <utility>
#include <vector>

#include "ltlshield/monitor/alphabet.hpp"
#include "ltlshield/reach/polyhedron.hpp"

namespace ltlshield::reach {

struct LabelRegion {
  monitor::Letter letter;
  Polyhedron region;

  friend bool operator==(const LabelRegion&, const LabelRegion&) = default;
};

/// Labeling function L: X → 2^AP given by a partition into polyhedra.
class LabelMap {
 public:
  LabelMap() = default;
  explicit LabelMap(std::vector<LabelRegion> regions);

  const std::vector<LabelRegion>& regions() const noexcept { return regions_; }

  /// Letter of the first region containing x. Throws Error if none does.
  monitor::Letter label(const Vec& x) const;

  /// (letter, bounding box of x ∩ region) for every region meeting x.
  std::vector<std::pair<monitor::Letter, Box>> split(const Box& x) const;

  friend bool operator==(const LabelMap&, const LabelMap&) = default;

 private:
  std::vector<LabelRegion> regions_;
};

inline std::vector<std::pair<monitor::Letter, Box>> split_by_labels(const Box& x, const LabelMap& lm) {
  return lm.split(x);
}

}  // namespace ltlshield::reach
