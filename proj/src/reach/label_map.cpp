#include "ltlshield/reach/label_map.hpp"

#include "ltlshield/errors.hpp"

namespace ltlshield::reach {

LabelMap::LabelMap(std::vector<LabelRegion> regions) : regions_(std::move(regions)) {
  if (regions_.empty()) throw Error("label map needs at least one region");
}

monitor::Letter LabelMap::label(const Vec& x) const {
  for (const auto& r : regions_) {
    if (r.region.contains(x)) return r.letter;
  }
  throw Error("state is not covered by any label region");
}

std::vector<std::pair<monitor::Letter, Box>> LabelMap::split(const Box& x) const {
  std::vector<std::pair<monitor::Letter, Box>> out;
  for (const auto& r : regions_) {
    if (auto piece = clip(x, r.region)) out.emplace_back(r.letter, std::move(*piece));
  }
  return out;
}

}  // namespace ltlshield::reach
