#pragma once

#include <deque>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ltlshield/shield/recovery.hpp"

namespace ltlshield::shield {

enum class Mode { Nominal, Recovering, Backup };
enum class ShieldVerdict { Accepted, Fault, Recovering, Backup };

std::string_view to_string(Mode m) noexcept;
std::string_view to_string(ShieldVerdict v) noexcept;

class NotInHighAssurance : public Error {
 public:
  using Error::Error;
};

class NotSafetyFormula : public Error {
 public:
  using Error::Error;
};

/// A soundness bug: the monitor reached ⊥ or BACKUP left S^b.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

struct Event {
  std::size_t tick;
  std::string kind;  // accept, fault, recovery-step, backup, reengage
  std::string detail;
};

struct Decision {
  Vec u;
  Mode mode;  // mode under which u was chosen
  ShieldVerdict verdict;
  std::optional<Recovery> fresh;
};

class ShieldSession {
 public:
  /// Computes q₀ = δ(q_init, L(x0)) and requires (x0, q₀) ∈ S^b.
  ShieldSession(std::shared_ptr<const ShieldConfig> cfg, Vec x0);

  /// One loop iteration: choose the input, then advance x and q with the
  /// environment's disturbance.
  Decision step(ProposalSource& src, const Vec& d_actual);

  /// The choice alone; `advance` completes the tick.
  Decision decide(ProposalSource& src);
  void advance(const Vec& u, const Vec& d_actual);

  const ShieldConfig& config() const noexcept { return *cfg_; }
  const Vec& x() const noexcept { return x_; }
  MonitorState q() const noexcept { return q_; }
  Mode mode() const noexcept { return mode_; }
  std::size_t tick() const noexcept { return tick_; }
  const std::deque<ControlLaw>& memory() const noexcept { return memory_; }
  /// Verified reach sets still ahead of the memorized remainder.
  const std::deque<reach::ProductSet>& memory_tube() const noexcept { return tube_; }
  const std::vector<Event>& events() const noexcept { return events_; }
  bool in_sb() const { return cfg_->in_sb(x_, q_); }

 private:
  RecoveryResult search(ProposalSource& src) const;
  Vec apply_memory();
  void log(std::string kind, std::string detail);

  std::shared_ptr<const ShieldConfig> cfg_;
  Vec x_;
  MonitorState q_ = 0;
  Mode mode_ = Mode::Nominal;
  std::size_t tick_ = 0;
  std::deque<ControlLaw> memory_;
  std::deque<reach::ProductSet> tube_;
  std::vector<Event> events_;
};

inline ShieldSession new_session(std::shared_ptr<const ShieldConfig> cfg, Vec x0) {
  return ShieldSession(std::move(cfg), std::move(x0));
}

}  // namespace ltlshield::shield
