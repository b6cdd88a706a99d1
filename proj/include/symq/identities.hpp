#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symq/c_poly.hpp"
#include "symq/nc_poly.hpp"
#include "symq/scalar.hpp"

namespace symq {

// c_1 = 1/12, c_h = -1/(2h+1) * sum_{i=1}^{h-1} c_i c_{h-i}.
// Entry h-1 holds c_h. Throws BadArgument for hmax == 0.
std::vector<Scalar> bernoulli_coeffs(unsigned hmax);
// B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0 with B_0 = 1 (so B_1 = -1/2).
Scalar bernoulli_number(unsigned n);

// [...[[a, bs[0]], bs[1]], ..., bs[n-1]].
NCPoly nested_commutator(const NCPoly& a, std::span<const NCPoly> bs);

// a <> sym_k(bs) - sym_{k+1}(a, bs).
NCPoly residual_a(const NCPoly& a, std::span<const NCPoly> bs);

// Sum over ordered tuples (i_1..i_2h) of distinct indices of
//   sym_{k-2h+1}([..[a, b_i1], .., b_i2h], remaining bs).
// Requires 1 <= h <= k/2.
NCPoly correction_c(unsigned h, const NCPoly& a, std::span<const NCPoly> bs);

struct CorrectionDE {
  NCPoly d;  // sym_{k-2h+1}([[..[a1, b_i1], .., b_i2h], a2], rest)
  NCPoly e;  // sym_{k-2h+1}([..[a1, b_i1], .., b_i2h], [a2, b_i(2h+1)], rest)
};
// d needs 1 <= h <= k/2, e needs 1 <= h <= (k-1)/2; an out-of-range part
// is returned as zero, and h == 0 or h > k/2 throws BadArgument.
CorrectionDE correction_d_e(unsigned h, const NCPoly& a1, const NCPoly& a2,
                            std::span<const NCPoly> bs);

// Right side of the expansion of [a1 <> a2, sym_k(bs)].
NCPoly pc2_rhs(const NCPoly& a1, const NCPoly& a2, std::span<const NCPoly> bs);
// Sum_i sym_k(b_1, .., [a, b_i], .., b_k).
NCPoly pc1_rhs(const NCPoly& a, std::span<const NCPoly> bs);

struct VerificationResult {
  std::string identity;
  bool holds = false;
  NCPoly residual;  // left side minus right side
};

// Each check runs on distinct free generators, so a zero residual proves
// the identity in every associative algebra.
VerificationResult verify_lemma1(unsigned k);
VerificationResult verify_pc1(unsigned k);
VerificationResult verify_pc2(unsigned k);
// b1 <> (b2 <> a) - b2 <> (b1 <> a) = 1/4 [[b1, b2], a].
VerificationResult verify_distr();

// d[i][j] is the central value of [L_i, M_j].
using PairingMatrix = std::vector<std::vector<CoeffPoly>>;

// Sum over partial matchings between Ls and Ms of
//   2^-h * prod d * sym_{l+m-2h}(unmatched Ls, unmatched Ms).
NCPoly wick_product(std::span<const NCPoly> ls, std::span<const NCPoly> ms,
                    const PairingMatrix& d);
// Odd h only, weighted 2^-(h-1).
NCPoly wick_commutator(std::span<const NCPoly> ls, std::span<const NCPoly> ms,
                       const PairingMatrix& d);

// sigma in one-line notation (1-based): position r of the reordered word
// holds N_sigma(r), where N = (L_1..L_l, M_1..M_m). sigma must keep the Ls
// and the Ms in their original relative order.
bool is_order_preserving_shuffle(const std::vector<unsigned>& sigma,
                                 std::size_t l, std::size_t m);
// L_1..L_l M_1..M_m rewritten as the sigma-ordered word plus the pairing
// terms whose L stands to the right of its M in that word.
NCPoly transposition_expand(std::span<const NCPoly> ls,
                            std::span<const NCPoly> ms, const PairingMatrix& d,
                            const std::vector<unsigned>& sigma);

// G = sum over multi-indices alpha, beta with |alpha + beta| = 2k+1 of
//   (-1)^|alpha| / (4^k alpha! beta!) d_x^alpha d_p^beta H * d_x^beta d_p^alpha F
// over canonical_system(n). The sign matches {p, x} = 1, so the k = 0 part
// is the Leibniz bracket.
CPoly moyal_bracket(const CPoly& h, const CPoly& f, std::size_t n);

struct SweepResult {
  std::string identity;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool holds() const { return failures == 0; }
};

// Random rational pairing matrices against the rewriting oracle of a
// constant system realizing [L_i, M_j] = d_ij.
SweepResult verify_wick(std::size_t l, std::size_t m, std::size_t trials,
                        std::uint64_t seed);
SweepResult verify_transposition(std::size_t l, std::size_t m,
                                 std::size_t trials, std::uint64_t seed);
// Random H, F of degree <= deg over canonical_system(n):
// [H^sym, F^sym] against symmetrize(moyal_bracket(H, F)) in normal form.
SweepResult verify_moyal(std::size_t n, unsigned deg, std::size_t trials,
                         std::uint64_t seed);

}  // namespace symq
