#pragma once

#include <string>
#include <string_view>

#include "posrep/number_system.hpp"

namespace posrep {

// System-spec grammar (ASCII, no whitespace):
//
//   spec      := scheme range override?
//   scheme    := "power(" INT ")" | "weights(" INT ("," INT)* ")"
//              | "longcount(" INT? ")" | "fib(" INT? ")" | "factorial(" INT? ")"
//   range     := "[" INT ".." INT "]"
//   override  := "{" POS ":" INT ".." INT (";" POS ":" INT ".." INT)* "}"
//
// The integer argument of longcount/fib/factorial is the position bound;
// empty parentheses leave the system unbounded. weights(...) lists weights
// least significant first and bounds the system at the list length.

/// Parses a system-spec string. Syntax errors carry the byte offset.
NumberSystem parse_system_spec(std::string_view text);

/// Canonical spec string for a system; parse_system_spec round-trips it.
std::string format_system_spec(const NumberSystem& sys);

}  // namespace posrep
