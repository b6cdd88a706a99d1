#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symq/coeff_poly.hpp"

namespace symq::detail {

// Joins (monomial text, coefficient) pairs into "a*m1 - b*m2 + (c + d)*m3".
// The monomial text "1" denotes the identity/constant monomial.
std::string format_term_sum(
    const std::vector<std::pair<std::string, const CoeffPoly*>>& terms,
    const std::vector<std::string>& params);

}  // namespace symq::detail
