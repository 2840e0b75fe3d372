#pragma once

#include <string>

#include "json.hpp"
#include "ltlshield/sim/simulate.hpp"

namespace ltlshield::sim {

/// One row per tick plus "# key: value" summary lines.
std::string trace_csv(const Trace& t);
nlohmann::json trace_json(const Trace& t);
std::string summary_text(const Trace& t);

}  // namespace ltlshield::sim
