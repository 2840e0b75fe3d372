#include "ltlshield/sim/driver.hpp"

#include <algorithm>

namespace ltlshield::sim {
namespace {

using reach::ControlLaw;

std::vector<ControlLaw> hold(const Vec& u, std::size_t count) {
  return std::vector<ControlLaw>(count, ControlLaw::constant(u));
}

class SafeDriver : public Driver {
 public:
  SafeDriver(DriverSpec spec, std::size_t m) : spec_(std::move(spec)), m_(m) {}
  std::vector<ControlLaw> propose(std::size_t, const Vec& x, std::size_t count) override {
    auto out = hold(Vec::Constant(static_cast<Eigen::Index>(m_), spec_.brake), count);
    if (!out.empty() && spec_.gate.contains(x)) out[0] = ControlLaw::constant(Vec::Constant(static_cast<Eigen::Index>(m_), spec_.gentle));
    return out;
  }

 private:
  DriverSpec spec_;
  std::size_t m_;
};

class FaultyLateDriver : public Driver {
 public:
  FaultyLateDriver(DriverSpec spec, std::size_t m) : spec_(std::move(spec)), m_(m) {}
  std::vector<ControlLaw> propose(std::size_t tick, const Vec&, std::size_t count) override {
    const double u = tick < spec_.switch_tick ? spec_.throttle : spec_.late;
    return hold(Vec::Constant(static_cast<Eigen::Index>(m_), u), count);
  }

 private:
  DriverSpec spec_;
  std::size_t m_;
};

class ConstantDriver : public Driver {
 public:
  explicit ConstantDriver(Vec u) : u_(std::move(u)) {}
  std::vector<ControlLaw> propose(std::size_t, const Vec&, std::size_t count) override { return hold(u_, count); }

 private:
  Vec u_;
};

class ReplayDriver : public Driver {
 public:
  explicit ReplayDriver(std::vector<Vec> inputs) : inputs_(std::move(inputs)) {}
  std::vector<ControlLaw> propose(std::size_t tick, const Vec&, std::size_t count) override {
    std::vector<ControlLaw> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(ControlLaw::constant(inputs_[std::min(tick + i, inputs_.size() - 1)]));
    }
    return out;
  }

 private:
  std::vector<Vec> inputs_;
};

}  // namespace

std::unique_ptr<Driver> make_driver(const DriverSpec& spec, const reach::AffineDynamics& dyn) {
  const auto m = dyn.m();
  if (spec.name == "safe") {
    if (static_cast<std::size_t>(spec.gate.a.size()) != dyn.n()) throw Error("safe driver needs a gate over the state");
    return std::make_unique<SafeDriver>(spec, m);
  }
  if (spec.name == "faulty-late") return std::make_unique<FaultyLateDriver>(spec, m);
  if (spec.name == "full-throttle") return std::make_unique<ConstantDriver>(dyn.U.hi);
  if (spec.name == "replay") {
    if (spec.inputs.empty()) throw Error("replay driver needs at least one input");
    for (const auto& u : spec.inputs) {
      if (static_cast<std::size_t>(u.size()) != m) throw DimensionError("replay input has the wrong dimension");
    }
    return std::make_unique<ReplayDriver>(spec.inputs);
  }
  if (spec.name == "external") throw Error("the external driver is only available through the gateway");
  throw Error("unknown driver '" + spec.name + "'");
}

}  // namespace ltlshield::sim
