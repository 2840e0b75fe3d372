#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ltlshield/errors.hpp"
#include "ltlshield/shield/config.hpp"

namespace ltlshield::sim {

using reach::Box;
using reach::Vec;

/// Malformed scenario document. The message carries line context for syntax
/// errors and a JSON pointer for structural ones.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

struct DriverSpec {
  std::string name = "safe";  // safe, faulty-late, full-throttle, replay, external
  std::vector<Vec> inputs;    // replay
  std::size_t switch_tick = 3;  // faulty-late
  double throttle = 2.0;
  double brake = -2.0;
  double late = 0.0;           // faulty-late input after switch_tick
  double gentle = 1.0;         // safe: input while inside the gate
  reach::HalfSpace gate;       // safe: accelerate while aᵀx ≤ b

  friend bool operator==(const DriverSpec&, const DriverSpec&) = default;
};

struct LabelSpec {
  std::vector<std::string> letter;
  reach::Polyhedron region;
};

struct Scenario {
  std::string name;
  reach::AffineDynamics dynamics;
  std::vector<std::string> ap;
  std::vector<LabelSpec> labels;
  std::string formula;
  std::vector<std::pair<std::string, reach::Polyhedron>> sb;  // monitor state name → region
  reach::ControlLaw backup;
  std::size_t nmax = 8;
  bool reengage = false;
  shield::DisturbanceMode mode = shield::DisturbanceMode::Disturbed;
  bool allow_non_safety = false;
  Vec x0;
  std::size_t horizon = 200;
  DriverSpec driver;
  std::string strategy = "uniform";
  Vec adversary;  // sign per disturbance dimension for the extreme strategy
  std::optional<Box> frame;
  double cell = 0.05;
  std::string landmark;  // proposition whose first occurrence the trace summary reports
};

nlohmann::json to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);
std::string scenario_text(const Scenario& s);

/// Compiles the formula and resolves every name. Throws ScenarioError on
/// names that do not exist.
std::shared_ptr<shield::ShieldConfig> build_config(const Scenario& s);

/// The DeLorean case study with the given driver profile.
Scenario delorean_scenario(const std::string& profile);

}  // namespace ltlshield::sim
