#pragma once

#include "fptkit/poly.hpp"

#include <string>
#include <vector>

namespace fptkit {

// Grammar, whitespace-insensitive:
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { ['*'] factor }        (juxtaposition multiplies)
//   factor := INT | VAR ['^' INT] | '(' expr ')' ['^' INT]
//   VAR    := [A-Za-z][A-Za-z0-9_]*          (must name a ring variable)
// Integer coefficients reduce mod p; exponents must fit in 31 bits.
// Errors carry the byte offset of the offending token.
Poly parse_poly(const Ring& R, const std::string& text);

// Comma-separated polynomials (commas inside parentheses do not split).
std::vector<Poly> parse_ideal(const Ring& R, const std::string& text);

} // namespace fptkit
