#pragma once

#include <cstdint>
#include <random>

#include "symq/c_poly.hpp"
#include "symq/nc_poly.hpp"

namespace symq {

// Seeded generator with a fixed range mapping, so a seed reproduces the
// same instance sequence on every platform (std distributions do not
// guarantee that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Draws from {-3..3}/{1,2}; the nonzero variant redraws zeros.
Scalar random_rational(Rng& rng);
Scalar random_nonzero_rational(Rng& rng);

// Random coefficient: a rational, or (with params > 0) a polynomial of degree
// <= 1 in the first `params` central parameters.
CoeffPoly random_coeff(Rng& rng, std::size_t params);

struct RandomPolyShape {
  unsigned max_degree = 3;
  unsigned max_terms = 4;
  unsigned min_degree = 0;
  // Coefficients depend on this many central parameters (0 = rational).
  std::size_t params = 0;
};

CPoly random_cpoly(const AlphabetPtr& alphabet, Rng& rng, RandomPolyShape shape);
// b_1 B_1 + ... + b_l B_l + c with random coefficients.
CPoly random_affine(const AlphabetPtr& alphabet, Rng& rng, std::size_t params = 0);
NCPoly random_ncpoly(const AlphabetPtr& alphabet, Rng& rng, RandomPolyShape shape);

}  // namespace symq
