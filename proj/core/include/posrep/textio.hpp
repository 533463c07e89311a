#pragma once

#include <string>
#include <string_view>

#include "posrep/numeral.hpp"

namespace posrep {

/// Numeral notations.
///
///   Dotted      decimal digit values joined by ".", "-" marks a negative
///               digit: "9.13.20.0.0", "1.-1.1".
///   BijectiveX  one glyph per digit, no separators: 1-9, X = ten, then
///               A = eleven upward (X stays reserved for ten, so the
///               letter run tops out at Z = 35).
///   Roman       non-positional; handled by roman_parse/roman_format.
enum class NotationKind { Dotted, BijectiveX, Roman };

/// Parses text into a digit sequence, most significant first. Errors carry
/// the byte offset of the offending character.
Numeral parse_numeral(std::string_view text, NotationKind kind);

std::string format_numeral(const Numeral& n, NotationKind kind);

enum class RomanMode { Subtractive, Additive };

/// Accepts classical subtractive forms (IV, IX, XL, XC, CD, CM) as well as
/// plain additive runs (IIII, VIIII); both readings of a value agree.
Integer roman_parse(std::string_view text);

/// Formats 1..3999. Subtractive mode emits the classical canonical form;
/// additive mode never uses a subtractive pair.
std::string roman_format(const Integer& v, RomanMode mode);

}  // namespace posrep
