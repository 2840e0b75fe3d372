#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ltlshield/shield/session.hpp"
#include "ltlshield/sim/disturbance.hpp"
#include "ltlshield/sim/scenario.hpp"

namespace ltlshield::gateway {

using nlohmann::json;

/// One operator connection: buffered throttle, shield session, disturbance.
/// Not thread-safe; the server serializes calls per connection.
class GatewaySession {
 public:
  GatewaySession(sim::Scenario sc, std::uint64_t seed);

  json config_message() const;

  /// Applies one client frame. Returns an error frame for malformed input.
  std::optional<json> handle(const std::string& text);
  std::optional<json> handle(const json& msg);

  /// One shield tick. Nothing while paused or halted; an error frame when the
  /// shield breaks, after which the session stays halted until reset.
  std::optional<json> tick();

  void reset();
  bool paused() const noexcept { return paused_; }
  bool halted() const noexcept { return halted_; }
  double throttle() const noexcept { return throttle_; }
  /// The input the buffered throttle maps to in U.
  reach::Vec buffered_input() const;
  const shield::ShieldSession& session() const { return *session_; }

 private:
  sim::Scenario scenario_;
  std::shared_ptr<const shield::ShieldConfig> cfg_;
  std::uint64_t seed_;
  std::optional<shield::ShieldSession> session_;
  std::optional<sim::DisturbanceSampler> env_;
  double throttle_ = 0.0;
  bool paused_ = false;
  bool halted_ = false;
  std::vector<shield::Event> pending_;
};

json error_message(const std::string& message);

}  // namespace ltlshield::gateway
