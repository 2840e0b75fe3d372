#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ltlshield/errors.hpp"
#include "ltlshield/monitor/formula.hpp"
#include "ltlshield/monitor/monitor.hpp"
#include "ltlshield/reach/product_set.hpp"

namespace ltlshield::shield {

using monitor::MonitorState;
using reach::ControlLaw;
using reach::Vec;

/// Deterministic runs use the point-simulation search; Disturbed runs the
/// reach-set search (which also accepts a point disturbance box).
enum class DisturbanceMode { Deterministic, Disturbed };

struct ShieldConfig {
  std::optional<monitor::Formula> formula;  // needed for the safety check at session start
  monitor::Monitor monitor;
  reach::AffineDynamics dynamics;
  reach::LabelMap labels;
  reach::GuardedRegion sb;
  ControlLaw backup;
  std::size_t nmax = 8;
  bool reengage = false;
  DisturbanceMode mode = DisturbanceMode::Disturbed;
  bool allow_non_safety = false;

  /// Throws Error on inconsistent pieces (dimensions, q⊥ in sb, nmax = 0,
  /// non-point D in deterministic mode).
  void validate() const;
  bool in_sb(const Vec& x, MonitorState q) const { return sb.contains(q, x); }
};

/// The performance controller's lookahead for one query: item i is requested
/// on demand and may be missing.
class ProposalSource {
 public:
  virtual ~ProposalSource() = default;
  virtual std::optional<ControlLaw> request(std::size_t i) = 0;
};

class ListProposal : public ProposalSource {
 public:
  explicit ListProposal(std::vector<ControlLaw> items) : items_(std::move(items)) {}
  std::optional<ControlLaw> request(std::size_t i) override {
    ++requests_;
    if (i >= items_.size()) return std::nullopt;
    return items_[i];
  }
  std::size_t requests() const noexcept { return requests_; }

 private:
  std::vector<ControlLaw> items_;
  std::size_t requests_ = 0;
};

/// Constant hold of `u` over `count` items with trivial domains.
std::vector<ControlLaw> constant_hold(const Vec& u, std::size_t count);

}  // namespace ltlshield::shield
