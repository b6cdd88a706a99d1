#pragma once

// Independent oracles shared by the test binaries. None of these reuse the
// library's own expansion or rewriting code.

#include <algorithm>
#include <numeric>
#include <vector>

#include "symq/c_poly.hpp"
#include "symq/nc_poly.hpp"
#include "symq/relations.hpp"
#include "symq/scalar.hpp"

namespace symq::test {

inline NCPoly gen(const AlphabetPtr& a, Letter g) {
  return NCPoly::generator(a, g);
}

inline NCPoly one(const AlphabetPtr& a) {
  return NCPoly::constant(a, CoeffPoly(1L));
}

// (1/k!) * sum over all k! index orders, multiplied out term by term.
inline NCPoly brute_sym(const std::vector<NCPoly>& args) {
  const AlphabetPtr& a = args.at(0).alphabet();
  std::vector<std::size_t> idx(args.size());
  std::iota(idx.begin(), idx.end(), 0);
  NCPoly out(a);
  Scalar count = 0;
  do {
    NCPoly prod = one(a);
    for (auto i : idx) prod = prod * args[i];
    out += prod;
    count += 1;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out * CoeffPoly(Scalar(1) / count);
}

// Akiyama-Tanigawa; yields B_1 = +1/2, which does not affect even indices.
inline Scalar akiyama_tanigawa(unsigned n) {
  std::vector<Scalar> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Scalar(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
    }
  }
  return a[0];
}

// Realizes canonical_system(n) as x_i = multiplication, p_i = d/dx_i on
// polynomials in x, so {p_i, x_j} = delta_ij. Functions are CPolys over the
// same alphabet with zero p-exponents.
class DiffRealization {
 public:
  explicit DiffRealization(std::size_t n) : n_(n) {}

  CPoly apply(const NCPoly& op, const CPoly& f) const {
    CPoly out(f.alphabet());
    for (const auto& [w, c] : op.terms()) {
      CPoly g = f;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it < n_) {
          g = g * CPoly::generator(f.alphabet(), *it);
        } else {
          g = derivative(g, static_cast<Letter>(*it - n_));
        }
        if (g.is_zero()) break;
      }
      out += g * c;
    }
    return out;
  }

  // True iff op kills every x-monomial of degree <= bound. For bound at
  // least the largest number of p letters in a word this decides op = 0.
  bool annihilates(const NCPoly& op, unsigned bound) const {
    const AlphabetPtr& a = op.alphabet();
    std::vector<std::uint16_t> e(2 * n_, 0);
    return visit(op, a, e, 0, bound);
  }

  bool equal(const NCPoly& a, const NCPoly& b) const {
    NCPoly d = a - b;
    unsigned bound = 0;
    for (const auto& [w, c] : d.terms()) {
      unsigned ps = 0;
      for (Letter g : w) ps += g >= n_ ? 1 : 0;
      bound = std::max(bound, ps);
    }
    return annihilates(d, bound);
  }

 private:
  bool visit(const NCPoly& op, const AlphabetPtr& a,
             std::vector<std::uint16_t>& e, std::size_t i,
             unsigned left) const {
    if (i == n_) {
      return apply(op, CPoly::monomial(a, e)).is_zero();
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = static_cast<std::uint16_t>(k);
      if (!visit(op, a, e, i + 1, left - k)) return false;
    }
    e[i] = 0;
    return true;
  }

  std::size_t n_;
};

}  // namespace symq::test
