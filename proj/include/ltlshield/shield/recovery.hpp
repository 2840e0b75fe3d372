#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltlshield/shield/config.hpp"

namespace ltlshield::shield {

struct Recovery {
  std::vector<ControlLaw> laws;          // g₀ … g_j, 1 ≤ j + 1 ≤ nmax + 1
  std::vector<reach::ProductSet> tube;   // R̃₁ … R̃_{j+1}; the last lies in S^b
};

struct RecoveryResult {
  std::optional<Recovery> recovery;
  std::string reason;  // why the search failed; empty on success
  explicit operator bool() const noexcept { return recovery.has_value(); }
};

/// Point simulation with the (point) disturbance. Requires a deterministic config.
RecoveryResult recovery(const Vec& x, MonitorState q, ProposalSource& src, const ShieldConfig& cfg);

/// Reach-set search over the disturbance box.
RecoveryResult recovery_d(const Vec& x, MonitorState q, ProposalSource& src, const ShieldConfig& cfg);

}  // namespace ltlshield::shield
