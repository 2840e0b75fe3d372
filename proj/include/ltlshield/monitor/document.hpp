#pragma once

#include <string>

#include "json.hpp"

#include "ltlshield/monitor/monitor.hpp"

namespace ltlshield::monitor {

// Monitor document (JSON):
//
//   {
//     "ap": ["fast", "tower"],
//     "states": [{"id": 0, "name": "q0", "output": "inc"}, ...],
//     "initial": 0,
//     "transitions": [{"state": 0, "letter": ["fast"], "next": 0}, ...]
//   }
//
// One transition row per (state, letter); letters are sorted proposition
// lists and rows are ordered by state, then letter bits.

nlohmann::json to_document(const Monitor& m);
/// Throws ltlshield::Error on a malformed or non-total document.
Monitor from_document(const nlohmann::json& doc);

std::string to_document_text(const Monitor& m);
Monitor parse_document_text(const std::string& text);

/// Graphviz rendering: one node per state labelled with its output; ⊤ drawn
/// with a double border and ⊥ dashed. Parallel edges are merged and labelled
/// with every letter they carry.
std::string to_dot(const Monitor& m);

}  // namespace ltlshield::monitor
