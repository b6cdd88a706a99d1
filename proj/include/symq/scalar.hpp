#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symq {

// Exact rational. mpq_class keeps values in lowest terms with a positive
// denominator after every arithmetic operation; parse_scalar canonicalizes
// input text the same way.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0). Throws AlgebraError(Parse).
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

Scalar factorial(unsigned n);

}  // namespace symq
