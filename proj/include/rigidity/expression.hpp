// Text form of ring elements, for the command line.
//
// Grammar, loosest to tightest binding:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' INT)*
//   atom   := INT | x<k> | '(' expr ')'
//
// Generators are written x1, x2, ... (1-based). Unary minus binds looser
// than '^', so -x1^2 means -(x1^2). Whitespace is insignificant.

#pragma once

#include <string_view>

#include "rigidity/ring.hpp"

namespace rigidity {

// Parses and evaluates an expression in the given ring. Throws ParseError
// on malformed input, generator indices outside 1..m, or exponents beyond
// the supported range.
RingElement parse_expression(std::string_view text, const RingSpec& spec);

}  // namespace rigidity
