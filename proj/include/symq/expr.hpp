#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symq/c_poly.hpp"
#include "symq/coeff_poly.hpp"

namespace symq {

// Commutative polynomial expressions:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*'? factor)*
//   factor := '-' factor | atom ('^' uint)?
//   atom   := rational | name | '(' expr ')'
// Rationals are "p" or "p/q". Names resolve to generators of the alphabet
// or to its central parameters. Errors throw ParseError with a 1-based
// line and column.
CPoly parse_expr(std::string_view src, const AlphabetPtr& alphabet);

// Parameter-only expression (no generators), e.g. "2*hbar - 1/3".
CoeffPoly parse_coeff(std::string_view src,
                      const std::vector<std::string>& params);

}  // namespace symq
