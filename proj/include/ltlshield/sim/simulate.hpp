#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltlshield/monitor/monitor.hpp"
#include "ltlshield/shield/session.hpp"
#include "ltlshield/sim/scenario.hpp"

namespace ltlshield::sim {

/// One tick: the state before the input, the shield's choice, the drawn disturbance.
struct TraceRecord {
  std::size_t tick;
  Vec x;
  monitor::MonitorState q;
  monitor::Letter letter;
  std::string mode;
  std::string verdict;
  Vec u;
  Vec d;
};

struct TraceSummary {
  std::size_t ticks = 0;
  std::optional<std::size_t> crossing_tick;  // first record whose letter holds the landmark
  std::optional<Vec> crossing_state;
  bool bottom_reached = false;  // some record has q = q⊥
  std::size_t faults = 0;
  std::optional<std::size_t> first_fault_tick;
  Vec final_x;
  monitor::MonitorState final_q = 0;
  monitor::Letter final_letter;
};

struct Trace {
  std::string scenario;
  std::uint64_t seed = 0;
  bool shielded = true;
  monitor::Alphabet ap;
  std::vector<std::string> state_names;
  std::vector<TraceRecord> records;
  std::vector<shield::Event> events;
  TraceSummary summary;
};

struct SimOptions {
  std::uint64_t seed = 0;
  std::optional<std::size_t> ticks;  // defaults to the scenario horizon
  bool shield = true;                // false applies the driver's first item unchecked
};

Trace simulate(const Scenario& sc, const SimOptions& opts);
Trace simulate(const Scenario& sc, std::shared_ptr<const shield::ShieldConfig> cfg, const SimOptions& opts);

/// Thrown by check_trace when the recomputed run disagrees with the record.
class TraceMismatch : public Error {
 public:
  using Error::Error;
};

/// Re-runs the monitor over the trace letters, checks every recorded q, and
/// returns the final verdict.
monitor::Verdict check_trace(const Trace& t, const monitor::Monitor& m);

}  // namespace ltlshield::sim
