#pragma once

#include <optional>
#include <vector>

#include "ltlshield/reach/product_set.hpp"

namespace ltlshield::reach {

struct ValidationWitness {
  MonitorState q;
  std::size_t cell;  // row-major index in the grid over q's region
  Box box;
  ProductSet image;
};

struct ValidationReport {
  bool pass = true;
  std::size_t cells = 0;
  std::vector<ValidationWitness> witnesses;  // sorted by (q, cell)
};

/// Covers every region of `sb` (intersected with `frame`) by grid cells of
/// side ≤ `cell` and checks that one backup step keeps each cell inside sb.
/// Throws Error if a region is unbounded and no frame bounds it.
ValidationReport validate_high_assurance(const GuardedRegion& sb, const ControlLaw& backup,
                                         const AffineDynamics& dyn, const LabelMap& lm, const monitor::Monitor& m,
                                         double cell, const std::optional<Box>& frame = std::nullopt);

}  // namespace ltlshield::reach
