#pragma once

#include <string>
#include <string_view>

#include "sqdepth/ideal_pair.hpp"

namespace sqdepth {

// Instance documents look like
//
//   # comment
//   n = 4
//   I: x1, x2*x3
//   J: 0
//
// Whitespace is insignificant. A monomial is `1` or `x<i>` factors joined by `*`.

/// Parses one monomial token (whitespace already removed). Throws ParseError.
Monomial parse_monomial(std::string_view token, int n, std::size_t line = 0);

/// Parses and validates an instance document. Throws ParseError on syntax
/// problems (including repeated variables and indices above n) and
/// InvalidIdealPair when J is not contained in I.
IdealPair parse_ideal_pair(std::string_view text);

/// Reads and parses an instance file.
IdealPair read_ideal_pair(const std::string& path);

/// Renders a generator list as `x1, x2*x3` or `0` when empty.
std::string format_generators(const Generators& gens);

/// Renders an instance document that parses back to the same pair.
std::string format_ideal_pair(const IdealPair& ip);

}  // namespace sqdepth
