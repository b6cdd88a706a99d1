#include "symq/random.hpp"

#include <limits>

namespace symq {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Scalar random_rational(Rng& rng) {
  Scalar q(rng.uniform(-3, 3), rng.uniform(1, 2));
  q.canonicalize();
  return q;
}

Scalar random_nonzero_rational(Rng& rng) {
  Scalar q;
  do {
    q = random_rational(rng);
  } while (q == 0);
  return q;
}

CoeffPoly random_coeff(Rng& rng, std::size_t params) {
  if (params == 0) return CoeffPoly(random_nonzero_rational(rng));
  CoeffPoly c;
  do {
    c = CoeffPoly(random_rational(rng));
    for (std::size_t d = 0; d < params; ++d) {
      c += CoeffPoly::param(d) * random_rational(rng);
    }
  } while (c.is_zero());
  return c;
}

CPoly random_cpoly(const AlphabetPtr& alphabet, Rng& rng,
                   RandomPolyShape shape) {
  CPoly out(alphabet);
  const auto n = static_cast<std::int64_t>(alphabet->size());
  const auto terms = rng.uniform(1, shape.max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    auto deg = rng.uniform(shape.min_degree, shape.max_degree);
    Exponents e(alphabet->size(), 0);
    for (std::int64_t k = 0; k < deg; ++k) ++e[rng.uniform(0, n - 1)];
    out.add_term(e, random_coeff(rng, shape.params));
  }
  return out;
}

CPoly random_affine(const AlphabetPtr& alphabet, Rng& rng, std::size_t params) {
  CPoly out = CPoly::constant(alphabet, CoeffPoly(random_rational(rng)));
  for (std::size_t g = 0; g < alphabet->size(); ++g) {
    if (rng.uniform(0, 3) == 0) continue;  // leave some generators out
    out += CPoly::generator(alphabet, static_cast<Letter>(g)) *
           random_coeff(rng, params);
  }
  return out;
}

NCPoly random_ncpoly(const AlphabetPtr& alphabet, Rng& rng,
                     RandomPolyShape shape) {
  NCPoly out(alphabet);
  const auto n = static_cast<std::int64_t>(alphabet->size());
  const auto terms = rng.uniform(1, shape.max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    auto deg = rng.uniform(shape.min_degree, shape.max_degree);
    Word w;
    for (std::int64_t k = 0; k < deg; ++k) {
      w.push_back(static_cast<Letter>(rng.uniform(0, n - 1)));
    }
    out.add_term(w, random_coeff(rng, shape.params));
  }
  return out;
}

}  // namespace symq
