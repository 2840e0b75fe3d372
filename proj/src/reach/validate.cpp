#include "ltlshield/reach/validate.hpp"

#include <cmath>

#include <fmt/format.h>

#include "ltlshield/errors.hpp"

namespace ltlshield::reach {

ValidationReport validate_high_assurance(const GuardedRegion& sb, const ControlLaw& backup,
                                         const AffineDynamics& dyn, const LabelMap& lm, const monitor::Monitor& m,
                                         double cell, const std::optional<Box>& frame) {
  if (!(cell > 0.0)) throw Error("grid cell size must be positive");
  ValidationReport report;
  const auto n = dyn.n();
  for (const auto& [q, region] : sb.regions()) {
    if (m.is_bottom(q)) throw Error("high assurance region contains the bottom monitor state");
    auto bounds = clip(frame ? *frame : Box::unbounded(n), region);
    if (!bounds) continue;
    if (!bounds->bounded()) {
      throw Error(fmt::format("region for monitor state '{}' is unbounded; supply a bounding frame", m.name(q)));
    }

    std::vector<std::size_t> counts(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = static_cast<Eigen::Index>(i);
      const double width = bounds->hi(e) - bounds->lo(e);
      counts[i] = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(width / cell)));
      total *= counts[i];
    }

    for (std::size_t index = 0; index < total; ++index) {
      Vec lo(n), hi(n);
      std::size_t rest = index;
      for (std::size_t i = n; i-- > 0;) {
        const auto e = static_cast<Eigen::Index>(i);
        const std::size_t k = rest % counts[i];
        rest /= counts[i];
        const double side = (bounds->hi(e) - bounds->lo(e)) / static_cast<double>(counts[i]);
        lo(e) = bounds->lo(e) + side * static_cast<double>(k);
        hi(e) = k + 1 == counts[i] ? bounds->hi(e) : bounds->lo(e) + side * static_cast<double>(k + 1);
      }
      auto piece = clip(Box(lo, hi), region);
      if (!piece) continue;
      ++report.cells;
      // Step the cell polytope itself rather than its bounding box: at a
      // region corner the box would include points outside the region.
      const auto corners = vertices(*piece, region);
      const Box next = corners.empty() ? box_step_affine(dyn, *piece, backup, dyn.D)
                                       : polytope_step_affine(dyn, corners, backup, dyn.D);
      ProductSet image;
      for (auto& [letter, part] : lm.split(next)) image.add(m.step(q, letter), part);
      if (!product_in_region(image, sb)) report.witnesses.push_back({q, index, *piece, std::move(image)});
    }
  }
  report.pass = report.witnesses.empty();
  return report;
}

}  // namespace ltlshield::reach
