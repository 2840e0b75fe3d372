#include "ltlshield/reach/product_set.hpp"

#include <algorithm>

namespace ltlshield::reach {

ProductSet ProductSet::singleton(MonitorState q, const Box& x) {
  ProductSet r;
  r.add(q, x);
  return r;
}

void ProductSet::add(MonitorState q, const Box& x) {
  auto& boxes = pieces_[q];
  for (const auto& b : boxes) {
    if (b.contains(x)) return;
  }
  std::erase_if(boxes, [&](const Box& b) { return x.contains(b); });
  boxes.push_back(x);
}

std::size_t ProductSet::box_count() const {
  std::size_t n = 0;
  for (const auto& [q, boxes] : pieces_) n += boxes.size();
  return n;
}

bool ProductSet::contains(MonitorState q, const Vec& x, double tol) const {
  auto it = pieces_.find(q);
  if (it == pieces_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(), [&](const Box& b) { return b.contains(x, tol); });
}

const Polyhedron* GuardedRegion::find(MonitorState q) const {
  auto it = regions_.find(q);
  return it == regions_.end() ? nullptr : &it->second;
}

bool GuardedRegion::contains(MonitorState q, const Vec& x) const {
  const auto* p = find(q);
  return p && p->contains(x);
}

ProductSet product_step(const ProductSet& r, const AffineDynamics& dyn, const ControlLaw& g, const LabelMap& lm,
                        const monitor::Monitor& m, const Box& d) {
  ProductSet out;
  for (const auto& [q, boxes] : r.pieces()) {
    for (const auto& b : boxes) {
      for (auto& [letter, piece] : lm.split(box_step_affine(dyn, b, g, d))) out.add(m.step(q, letter), piece);
    }
  }
  return out;
}

bool product_in_region(const ProductSet& r, const GuardedRegion& g) {
  for (const auto& [q, boxes] : r.pieces()) {
    const auto* p = g.find(q);
    if (!p) return false;
    for (const auto& b : boxes) {
      if (!box_in_polyhedron(b, *p)) return false;
    }
  }
  return true;
}

bool product_subset(const ProductSet& inner, const ProductSet& outer) {
  for (const auto& [q, boxes] : inner.pieces()) {
    auto it = outer.pieces().find(q);
    if (it == outer.pieces().end()) return false;
    for (const auto& b : boxes) {
      if (std::none_of(it->second.begin(), it->second.end(), [&](const Box& o) { return o.contains(b); })) return false;
    }
  }
  return true;
}

}  // namespace ltlshield::reach
