#include "ltlshield/gateway/session.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace ltlshield::gateway {
namespace {

json vec_json(const reach::Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

}  // namespace

json error_message(const std::string& message) { return {{"type", "error"}, {"message", message}}; }

GatewaySession::GatewaySession(sim::Scenario sc, std::uint64_t seed)
    : scenario_(std::move(sc)), cfg_(sim::build_config(scenario_)), seed_(seed) {
  reset();
}

json GatewaySession::config_message() const { return {{"type", "config"}, {"scenario", sim::to_json(scenario_)}}; }

void GatewaySession::reset() {
  session_.emplace(cfg_, scenario_.x0);
  env_.emplace(sim::parse_strategy(scenario_.strategy), cfg_->dynamics.D, seed_, scenario_.adversary);
  throttle_ = 0.0;
  halted_ = false;
  pending_.clear();
}

reach::Vec GatewaySession::buffered_input() const {
  const auto& U = cfg_->dynamics.U;
  // [-1, 1] maps linearly onto [lo, hi].
  return U.center() + throttle_ * (U.hi - U.lo) / 2.0;
}

std::optional<json> GatewaySession::handle(const std::string& text) {
  json msg;
  try {
    msg = json::parse(text);
  } catch (const json::parse_error& e) {
    return error_message(fmt::format("malformed frame: {}", e.what()));
  }
  return handle(msg);
}

std::optional<json> GatewaySession::handle(const json& msg) {
  if (!msg.is_object()) return error_message("frame must be an object");
  auto it = msg.find("type");
  if (it == msg.end() || !it->is_string()) return error_message("frame needs a string \"type\"");
  const auto type = it->get<std::string>();
  if (type == "throttle") {
    auto v = msg.find("value");
    if (v == msg.end() || !v->is_number()) return error_message("throttle needs a numeric \"value\"");
    const double raw = v->get<double>();
    throttle_ = std::clamp(raw, -1.0, 1.0);
    if (throttle_ != raw) {
      pending_.push_back({session_->tick(), "warning", fmt::format("throttle {} clamped to {}", raw, throttle_)});
    }
  } else if (type == "reset") {
    reset();
  } else if (type == "pause") {
    paused_ = true;
  } else if (type == "resume") {
    paused_ = false;
  } else {
    return error_message(fmt::format("unknown frame type '{}'", type));
  }
  return std::nullopt;
}

std::optional<json> GatewaySession::tick() {
  if (paused_ || halted_) return std::nullopt;
  auto& s = *session_;
  const auto& m = cfg_->monitor;
  const reach::Vec x = s.x();
  const auto q = s.q();
  const bool in_sb = s.in_sb();
  const std::size_t k = s.tick();
  const std::size_t seen = s.events().size();

  shield::ListProposal src(shield::constant_hold(buffered_input(), cfg_->nmax + 1));
  shield::Decision dec;
  try {
    dec = s.step(src, env_->draw());
  } catch (const Error& e) {
    halted_ = true;
    return error_message(fmt::format("shield halted at tick {}: {}", k, e.what()));
  }

  json state;
  state["type"] = "state";
  state["tick"] = k;
  state["x"] = x(0);
  state["v"] = x.size() > 1 ? x(1) : 0.0;
  state["q"] = m.name(q);
  state["mode"] = shield::to_string(dec.mode);
  state["verdict"] = shield::to_string(dec.verdict);
  state["in_sb"] = in_sb;
  state["u"] = vec_json(dec.u);

  json reach = json::array();
  auto add_tube = [&](const auto& tube) {
    std::size_t step = 1;
    for (const auto& r : tube) {
      for (const auto& [p, boxes] : r.pieces()) {
        for (const auto& b : boxes) reach.push_back({{"step", step}, {"q", m.name(p)}, {"lo", vec_json(b.lo)}, {"hi", vec_json(b.hi)}});
      }
      ++step;
    }
  };
  if (dec.fresh) {
    add_tube(dec.fresh->tube);
  } else {
    add_tube(s.memory_tube());
  }
  state["reach"] = std::move(reach);

  json events = json::array();
  for (const auto& e : pending_) events.push_back({{"tick", e.tick}, {"kind", e.kind}, {"detail", e.detail}});
  pending_.clear();
  for (std::size_t i = seen; i < s.events().size(); ++i) {
    const auto& e = s.events()[i];
    events.push_back({{"tick", e.tick}, {"kind", e.kind}, {"detail", e.detail}});
  }
  state["events"] = std::move(events);
  return state;
}

}  // namespace ltlshield::gateway
