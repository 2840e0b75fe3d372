#pragma once

#include <string_view>

#include "ltlshield/monitor/alphabet.hpp"
#include "ltlshield/monitor/formula.hpp"

namespace ltlshield::monitor {

// Concrete syntax, loosest binding first:
//
//   formula  := or ( "->" formula )?          right-associative
//   or       := and ( "|" and )*
//   and      := temporal ( "&" temporal )*
//   temporal := unary ( ("U" | "W" | "R") temporal )?   right-associative
//   unary    := ("!" | "X" | "G" | "F") unary | primary
//   primary  := "true" | "false" | identifier | "(" formula ")"
//
// Identifiers are [A-Za-z_][A-Za-z0-9_]*; the single letters X U W R G F and
// the words true/false are reserved. "a -> b" is desugared to "!a | b".
//
// Throws ParseError (with the byte offset) on malformed input and on atoms
// missing from `ap`.
Formula parse_formula(std::string_view text, const Alphabet& ap);

/// Parses without checking atoms against a declared set.
Formula parse_formula(std::string_view text);

}  // namespace ltlshield::monitor
