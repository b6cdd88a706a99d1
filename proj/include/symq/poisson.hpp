#pragma once

#include "symq/c_poly.hpp"
#include "symq/relations.hpp"

namespace symq {

// Leibniz representation of {H, F}:
//   sum_{i,j <= l} {B_i, B_j} * dH/dB_i * dF/dB_j
// with {B_i, B_j} the relation value (constant, linear in B, or linear in T).
// H and F live over B; the result lives over T (which is B outside the
// general case).
CPoly leibniz_bracket(const CPoly& h, const CPoly& f, const RelationSystem& rel);

// True iff {C, B_i}_N = 0 for every generator. Linear systems only.
bool casimir_check(const CPoly& c, const RelationSystem& rel);

}  // namespace symq
