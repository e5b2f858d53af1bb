#pragma once

#include <string>

#include "czdg/ring_expr.hpp"

namespace czdg {

// Grammar:
//   ring     := product | atom
//   product  := atom ( "x" atom )+        "x" surrounded by whitespace; the
//                                         multiplication sign is an alias
//   atom     := "Z" int | "GF(" int "," int ")" | "F" int | quotient
//             | "(" ring ")"
//   quotient := "Z" int "[" var ("," var)* "]" "/" "(" poly ("," poly)* ")"
//               [ "^" int ]
// Polynomials are signed sums of integer-coefficient monomials with "^"
// powers, e.g. 2x, x^2 - 2. "F" takes a prime power: F4 = GF(2,2), F5 = Z5.
// An exponent after the ideal's closing ")" denotes an ideal power.
//
// Throws ParseError with a byte position on malformed input.
RingExpr parse_ring_expr(const std::string& text);

}  // namespace czdg
