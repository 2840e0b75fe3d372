#pragma once

#include <string_view>

#include "ltlshield/monitor/compile.hpp"

namespace ltlshield::monitor {

enum class SafetyClass { Safety, NotSafety };

std::string_view to_string(SafetyClass c) noexcept;

/// Safety iff every word violating `f` has a bad prefix. Decided by checking
/// that NBA(!f) accepts nothing while running in lockstep with the monitor of
/// `f` kept away from its ⊥ state: an accepted lasso there is a violating
/// word whose every prefix is still undecided.
SafetyClass classify_safety(const Formula& f, const Alphabet& ap, const CompileOptions& opts = {});

/// Same check against an already compiled monitor for `f`.
SafetyClass classify_safety(const Formula& f, const Monitor& m, const CompileOptions& opts = {});

}  // namespace ltlshield::monitor
