#include "ltlshield/shield/session.hpp"

#include <fmt/format.h>

#include "ltlshield/monitor/safety.hpp"

namespace ltlshield::shield {

std::string_view to_string(Mode m) noexcept {
  switch (m) {
    case Mode::Nominal: return "NOMINAL";
    case Mode::Recovering: return "RECOVERING";
    case Mode::Backup: return "BACKUP";
  }
  return "?";
}

std::string_view to_string(ShieldVerdict v) noexcept {
  switch (v) {
    case ShieldVerdict::Accepted: return "ACCEPTED";
    case ShieldVerdict::Fault: return "FAULT";
    case ShieldVerdict::Recovering: return "RECOVERING";
    case ShieldVerdict::Backup: return "BACKUP";
  }
  return "?";
}

ShieldSession::ShieldSession(std::shared_ptr<const ShieldConfig> cfg, Vec x0) : cfg_(std::move(cfg)), x_(std::move(x0)) {
  if (!cfg_) throw Error("session needs a configuration");
  cfg_->validate();
  if (static_cast<std::size_t>(x_.size()) != cfg_->dynamics.n()) throw DimensionError("initial state dimension");
  if (cfg_->formula && !cfg_->allow_non_safety &&
      monitor::classify_safety(*cfg_->formula, cfg_->monitor) != monitor::SafetyClass::Safety) {
    throw NotSafetyFormula("formula " + cfg_->formula->to_string() + " is not a safety property");
  }
  q_ = cfg_->monitor.step(cfg_->monitor.initial(), cfg_->labels.label(x_));
  if (!cfg_->in_sb(x_, q_)) {
    throw NotInHighAssurance(fmt::format("initial state is outside the high assurance region (monitor state '{}')",
                                         cfg_->monitor.name(q_)));
  }
}

RecoveryResult ShieldSession::search(ProposalSource& src) const {
  return cfg_->mode == DisturbanceMode::Deterministic ? recovery(x_, q_, src, *cfg_) : recovery_d(x_, q_, src, *cfg_);
}

void ShieldSession::log(std::string kind, std::string detail) {
  events_.push_back({tick_, std::move(kind), std::move(detail)});
}

Vec ShieldSession::apply_memory() {
  ControlLaw g = std::move(memory_.front());
  memory_.pop_front();
  if (!tube_.empty()) tube_.pop_front();
  log("recovery-step", fmt::format("{} left", memory_.size()));
  return g.evaluate(x_, cfg_->dynamics.U);
}

Decision ShieldSession::decide(ProposalSource& src) {
  const bool try_fresh = mode_ == Mode::Nominal || cfg_->reengage;
  if (try_fresh) {
    auto found = search(src);
    if (found) {
      auto& rec = *found.recovery;
      if (mode_ != Mode::Nominal) log("reengage", std::string(to_string(mode_)) + " -> NOMINAL");
      mode_ = Mode::Nominal;
      memory_.assign(rec.laws.begin() + 1, rec.laws.end());
      tube_.assign(rec.tube.begin() + 1, rec.tube.end());
      log("accept", fmt::format("{} item plan", rec.laws.size()));
      Vec u = rec.laws.front().evaluate(x_, cfg_->dynamics.U);
      return {std::move(u), Mode::Nominal, ShieldVerdict::Accepted, std::move(found.recovery)};
    }
    if (mode_ == Mode::Nominal) {
      log("fault", found.reason);
      if (!memory_.empty()) {
        mode_ = Mode::Recovering;
        Vec u = apply_memory();
        if (memory_.empty()) mode_ = Mode::Backup;
        return {std::move(u), Mode::Recovering, ShieldVerdict::Fault, std::nullopt};
      }
      mode_ = Mode::Backup;
      log("backup", "no memorized recovery");
      return {cfg_->backup.evaluate(x_, cfg_->dynamics.U), Mode::Backup, ShieldVerdict::Fault, std::nullopt};
    }
  }

  if (mode_ == Mode::Recovering && !memory_.empty()) {
    Vec u = apply_memory();
    if (memory_.empty()) mode_ = Mode::Backup;
    return {std::move(u), Mode::Recovering, ShieldVerdict::Recovering, std::nullopt};
  }
  if (mode_ != Mode::Backup) log("backup", "memorized recovery exhausted");
  mode_ = Mode::Backup;
  if (!cfg_->in_sb(x_, q_)) {
    throw InvariantBreach(fmt::format("backup engaged outside the high assurance region at tick {}", tick_));
  }
  return {cfg_->backup.evaluate(x_, cfg_->dynamics.U), Mode::Backup, ShieldVerdict::Backup, std::nullopt};
}

void ShieldSession::advance(const Vec& u, const Vec& d_actual) {
  x_ = cfg_->dynamics.step(x_, u, d_actual);
  q_ = cfg_->monitor.step(q_, cfg_->labels.label(x_));
  ++tick_;
  if (cfg_->monitor.is_bottom(q_)) {
    throw InvariantBreach(fmt::format("monitor reached the bottom state at tick {}", tick_));
  }
}

Decision ShieldSession::step(ProposalSource& src, const Vec& d_actual) {
  auto dec = decide(src);
  advance(dec.u, d_actual);
  return dec;
}

}  // namespace ltlshield::shield
