#pragma once

#include <memory>
#include <vector>

#include "ltlshield/sim/scenario.hpp"

namespace ltlshield::sim {

/// Scripted performance controller: one proposal of `count` items per tick.
class Driver {
 public:
  virtual ~Driver() = default;
  virtual std::vector<reach::ControlLaw> propose(std::size_t tick, const Vec& x, std::size_t count) = 0;
};

/// Throws Error for unknown names and for "external", which only the gateway can feed.
std::unique_ptr<Driver> make_driver(const DriverSpec& spec, const reach::AffineDynamics& dyn);

}  // namespace ltlshield::sim
