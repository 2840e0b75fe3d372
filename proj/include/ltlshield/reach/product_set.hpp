#pragma once

#include <map>
#include <vector>

#include "ltlshield/monitor/monitor.hpp"
#include "ltlshield/reach/dynamics.hpp"
#include "ltlshield/reach/label_map.hpp"

namespace ltlshield::reach {

using monitor::MonitorState;

/// Monitor-state-indexed union of boxes.
class ProductSet {
 public:
  using Map = std::map<MonitorState, std::vector<Box>>;

  ProductSet() = default;
  static ProductSet singleton(MonitorState q, const Box& x);

  /// Adds a box, dropping boxes already covered by another box at q.
  void add(MonitorState q, const Box& x);

  bool empty() const noexcept { return pieces_.empty(); }
  std::size_t box_count() const;
  const Map& pieces() const noexcept { return pieces_; }
  bool has(MonitorState q) const { return pieces_.count(q) != 0; }
  bool contains(MonitorState q, const Vec& x, double tol = 0.0) const;

  friend bool operator==(const ProductSet&, const ProductSet&) = default;

 private:
  Map pieces_;
};

/// Per-monitor-state polyhedral region; states without an entry are excluded.
class GuardedRegion {
 public:
  GuardedRegion() = default;
  explicit GuardedRegion(std::map<MonitorState, Polyhedron> regions) : regions_(std::move(regions)) {}

  void set(MonitorState q, Polyhedron p) { regions_[q] = std::move(p); }
  const Polyhedron* find(MonitorState q) const;
  bool contains(MonitorState q, const Vec& x) const;
  const std::map<MonitorState, Polyhedron>& regions() const noexcept { return regions_; }
  bool empty() const noexcept { return regions_.empty(); }

 private:
  std::map<MonitorState, Polyhedron> regions_;
};

/// One step of the lifted reach-set recursion under law g and disturbance box d.
ProductSet product_step(const ProductSet& r, const AffineDynamics& dyn, const ControlLaw& g, const LabelMap& lm,
                        const monitor::Monitor& m, const Box& d);
inline ProductSet product_step(const ProductSet& r, const AffineDynamics& dyn, const ControlLaw& g,
                               const LabelMap& lm, const monitor::Monitor& m) {
  return product_step(r, dyn, g, lm, m, dyn.D);
}

bool product_in_region(const ProductSet& r, const GuardedRegion& g);

/// Every box of `inner` lies in some box of `outer` with the same q.
bool product_subset(const ProductSet& inner, const ProductSet& outer);

}  // namespace ltlshield::reach
