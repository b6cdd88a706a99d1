#pragma once

#include <initializer_list>
#include <span>

#include "symq/c_poly.hpp"
#include "symq/nc_poly.hpp"

namespace symq {

// Symmetrized product (1/k!) * sum over all k! orderings of the
// concatenation product. Repeated arguments are merged so only distinct
// arrangements are multiplied out. Throws SymCapExceeded when k exceeds the
// alphabet's sym_cap and BadArgument for an empty list.
NCPoly sym(std::span<const NCPoly> args);
NCPoly sym(std::initializer_list<NCPoly> args);
// Same, with sym_0 = 1 over the given alphabet.
NCPoly sym(const AlphabetPtr& alphabet, std::span<const NCPoly> args);

// sym of two arguments: (ab + ba)/2.
NCPoly diamond(const NCPoly& a, const NCPoly& b);

// Lets all letters commute. Ring homomorphism onto CPoly.
CPoly abelianize(const NCPoly& p);

}  // namespace symq
