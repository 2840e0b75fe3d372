#pragma once

#include <cstddef>

#include "ltlshield/monitor/alphabet.hpp"
#include "ltlshield/monitor/formula.hpp"
#include "ltlshield/monitor/monitor.hpp"
#include "ltlshield/monitor/nba.hpp"

namespace ltlshield::monitor {

struct CompileOptions {
  /// Budget shared by each intermediate automaton (NBA and product).
  std::size_t state_cap = kDefaultStateCap;
};

/// Product of the determinized live parts of NBA(f) and NBA(!f), before
/// minimization. States are named "{i,j,..}|{k,..}" after the live NBA
/// states they track on each side.
Monitor build_unminimized_monitor(const Formula& f, const Alphabet& ap, const CompileOptions& opts = {});

/// LTL3 monitor for `f`: build_unminimized_monitor followed by minimize_dfa.
Monitor build_monitor(const Formula& f, const Alphabet& ap, const CompileOptions& opts = {});

/// Moore partition refinement. Drops unreachable states and merges states
/// with equal outputs on every word. Resulting states are numbered in
/// breadth-first order from the initial state (letters ascending) and named
/// "top"/"bot" for verdict states and q0, q1, ... for the rest.
Monitor minimize_dfa(const Monitor& m);

}  // namespace ltlshield::monitor
