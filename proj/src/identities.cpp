#include "symq/identities.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <utility>

#include "symq/errors.hpp"
#include "symq/freealg.hpp"
#include "symq/random.hpp"
#include "symq/relations.hpp"
#include "symq/symmetrization.hpp"

namespace symq {

std::vector<Scalar> bernoulli_coeffs(unsigned hmax) {
  if (hmax == 0) {
    throw AlgebraError(ErrorKind::BadArgument, "hmax must be at least 1");
  }
  std::vector<Scalar> c{Scalar(1, 12)};
  for (unsigned h = 2; h <= hmax; ++h) {
    Scalar s = 0;
    for (unsigned i = 1; i < h; ++i) s += c[i - 1] * c[h - i - 1];
    c.push_back(-s / (2 * h + 1));
  }
  return c;
}

Scalar bernoulli_number(unsigned n) {
  std::vector<Scalar> b{Scalar(1)};
  for (unsigned k = 1; k <= n; ++k) {
    Scalar s = 0;
    mpz_class binom = 1;  // C(k+1, j)
    for (unsigned j = 0; j < k; ++j) {
      s += Scalar(binom) * b[j];
      binom = binom * (k + 1 - j) / (j + 1);
    }
    b.push_back(-s / (k + 1));
  }
  return b[n];
}

NCPoly nested_commutator(const NCPoly& a, std::span<const NCPoly> bs) {
  NCPoly out = a;
  for (const auto& b : bs) out = commutator(out, b);
  return out;
}

NCPoly residual_a(const NCPoly& a, std::span<const NCPoly> bs) {
  std::vector<NCPoly> all{a};
  all.insert(all.end(), bs.begin(), bs.end());
  return diamond(a, sym(a.alphabet(), bs)) - sym(all);
}

namespace {

// Calls visit(chosen, rest) for every ordered tuple of `count` distinct
// indices in [0, n); rest lists the unused indices in increasing order.
template <typename Visit>
void for_each_ordered_tuple(std::size_t n, std::size_t count, Visit&& visit) {
  std::vector<std::size_t> chosen;
  std::vector<bool> used(n, false);
  auto rec = [&](auto& self) -> void {
    if (chosen.size() == count) {
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < n; ++i) {
        if (!used[i]) rest.push_back(i);
      }
      visit(chosen, rest);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      chosen.push_back(i);
      self(self);
      chosen.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
}

std::vector<NCPoly> pick(std::span<const NCPoly> bs,
                         const std::vector<std::size_t>& idx) {
  std::vector<NCPoly> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(bs[i]);
  return out;
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw AlgebraError(ErrorKind::BadArgument, what);
}

}  // namespace

NCPoly correction_c(unsigned h, const NCPoly& a, std::span<const NCPoly> bs) {
  const std::size_t k = bs.size();
  require_range(h >= 1 && 2 * h <= k, "correction C needs 1 <= h <= k/2");
  NCPoly out(a.alphabet());
  for_each_ordered_tuple(k, 2 * h, [&](const auto& chosen, const auto& rest) {
    std::vector<NCPoly> args{nested_commutator(a, pick(bs, chosen))};
    for (auto j : rest) args.push_back(bs[j]);
    out += sym(args);
  });
  return out;
}

CorrectionDE correction_d_e(unsigned h, const NCPoly& a1, const NCPoly& a2,
                            std::span<const NCPoly> bs) {
  const std::size_t k = bs.size();
  require_range(h >= 1 && 2 * h <= k, "corrections D/E need 1 <= h <= k/2");
  CorrectionDE out{NCPoly(a1.alphabet()), NCPoly(a1.alphabet())};
  for_each_ordered_tuple(k, 2 * h, [&](const auto& chosen, const auto& rest) {
    NCPoly inner = nested_commutator(a1, pick(bs, chosen));
    std::vector<NCPoly> args{commutator(inner, a2)};
    for (auto j : rest) args.push_back(bs[j]);
    out.d += sym(args);
  });
  if (2 * h + 1 <= k) {
    for_each_ordered_tuple(k, 2 * h + 1, [&](const auto& chosen,
                                             const auto& rest) {
      std::vector<std::size_t> head(chosen.begin(), chosen.end() - 1);
      std::vector<NCPoly> args{nested_commutator(a1, pick(bs, head)),
                               commutator(a2, bs[chosen.back()])};
      for (auto j : rest) args.push_back(bs[j]);
      out.e += sym(args);
    });
  }
  return out;
}

NCPoly pc1_rhs(const NCPoly& a, std::span<const NCPoly> bs) {
  NCPoly out(a.alphabet());
  std::vector<NCPoly> args(bs.begin(), bs.end());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    args[i] = commutator(a, bs[i]);
    out += sym(a.alphabet(), args);
    args[i] = bs[i];
  }
  return out;
}

namespace {

NCPoly pc2_half(const NCPoly& a1, const NCPoly& a2,
                std::span<const NCPoly> bs, const std::vector<Scalar>& c) {
  const std::size_t k = bs.size();
  NCPoly out(a1.alphabet());
  std::vector<NCPoly> args{a1};
  args.insert(args.end(), bs.begin(), bs.end());
  for (std::size_t i = 0; i < k; ++i) {
    args[i + 1] = commutator(a2, bs[i]);
    out += sym(args);
    args[i + 1] = bs[i];
  }
  for (unsigned h = 1; 2 * h <= k; ++h) {
    auto de = correction_d_e(h, a1, a2, bs);
    out.add_scaled(de.d, CoeffPoly(Scalar(-c[h - 1])));
    out.add_scaled(de.e, c[h - 1]);
  }
  return out;
}

}  // namespace

NCPoly pc2_rhs(const NCPoly& a1, const NCPoly& a2, std::span<const NCPoly> bs) {
  auto c = bernoulli_coeffs(std::max<unsigned>(1, bs.size() / 2));
  return pc2_half(a1, a2, bs, c) + pc2_half(a2, a1, bs, c);
}

namespace {

struct FreeSetup {
  AlphabetPtr alphabet;
  std::vector<NCPoly> heads;
  std::vector<NCPoly> bs;
};

FreeSetup free_generators(std::vector<std::string> heads, unsigned k) {
  std::vector<std::string> names = heads;
  for (unsigned i = 1; i <= k; ++i) names.push_back("B" + std::to_string(i));
  FreeSetup s;
  s.alphabet = make_alphabet(names);
  for (Letter g = 0; g < names.size(); ++g) {
    auto gen = NCPoly::generator(s.alphabet, g);
    if (g < heads.size()) {
      s.heads.push_back(gen);
    } else {
      s.bs.push_back(gen);
    }
  }
  return s;
}

VerificationResult finish(std::string identity, NCPoly residual) {
  bool holds = residual.is_zero();
  return {std::move(identity), holds, std::move(residual)};
}

}  // namespace

VerificationResult verify_lemma1(unsigned k) {
  require_range(k >= 2, "lemma1 needs k >= 2");
  auto s = free_generators({"A"}, k);
  const NCPoly& a = s.heads[0];
  auto c = bernoulli_coeffs(k / 2);
  NCPoly rhs(s.alphabet);
  for (unsigned h = 1; 2 * h <= k; ++h) {
    rhs.add_scaled(correction_c(h, a, s.bs), c[h - 1]);
  }
  return finish("lemma1 k=" + std::to_string(k), residual_a(a, s.bs) - rhs);
}

VerificationResult verify_pc1(unsigned k) {
  require_range(k >= 1, "pc1 needs k >= 1");
  auto s = free_generators({"A"}, k);
  const NCPoly& a = s.heads[0];
  NCPoly lhs = commutator(a, sym(s.bs));
  return finish("pc1 k=" + std::to_string(k), lhs - pc1_rhs(a, s.bs));
}

VerificationResult verify_pc2(unsigned k) {
  require_range(k >= 2, "pc2 needs k >= 2");
  auto s = free_generators({"A1", "A2"}, k);
  const NCPoly& a1 = s.heads[0];
  const NCPoly& a2 = s.heads[1];
  NCPoly lhs = commutator(diamond(a1, a2), sym(s.bs));
  return finish("pc2 k=" + std::to_string(k), lhs - pc2_rhs(a1, a2, s.bs));
}

VerificationResult verify_distr() {
  auto s = free_generators({"A"}, 2);
  const NCPoly& a = s.heads[0];
  const NCPoly& b1 = s.bs[0];
  const NCPoly& b2 = s.bs[1];
  NCPoly lhs = diamond(b1, diamond(b2, a)) - diamond(b2, diamond(b1, a));
  NCPoly rhs = commutator(commutator(b1, b2), a) * CoeffPoly(Scalar(1, 4));
  return finish("distr", lhs - rhs);
}

namespace {

void check_shape(std::span<const NCPoly> ls, std::span<const NCPoly> ms,
                 const PairingMatrix& d) {
  bool ok = d.size() == ls.size();
  for (const auto& row : d) ok = ok && row.size() == ms.size();
  if (!ok) {
    throw AlgebraError(ErrorKind::BadArgument,
                       "pairing matrix must be " + std::to_string(ls.size()) +
                           " x " + std::to_string(ms.size()));
  }
  if (ls.empty() && ms.empty()) {
    throw AlgebraError(ErrorKind::BadArgument, "no factors given");
  }
}

// Sum of prod d over all matchings, keyed by (matched Ls, matched Ms)
// bitmasks; also records the matching size.
struct MatchingSums {
  std::map<std::pair<unsigned, unsigned>, CoeffPoly> sums;
  void collect(const PairingMatrix& d, std::size_t l, std::size_t m) {
    CoeffPoly one(1L);
    rec(d, l, m, 0, 0, 0, one);
  }
  void rec(const PairingMatrix& d, std::size_t l, std::size_t m,
           std::size_t i, unsigned lmask, unsigned mmask,
           const CoeffPoly& weight) {
    if (i == l) {
      auto& slot = sums[{lmask, mmask}];
      slot += weight;
      return;
    }
    rec(d, l, m, i + 1, lmask, mmask, weight);
    for (std::size_t j = 0; j < m; ++j) {
      if ((mmask >> j) & 1U) continue;
      if (d[i][j].is_zero()) continue;
      rec(d, l, m, i + 1, lmask | (1U << i), mmask | (1U << j),
          weight * d[i][j]);
    }
  }
};

NCPoly wick_sum(std::span<const NCPoly> ls, std::span<const NCPoly> ms,
                const PairingMatrix& d, bool commutator_only) {
  check_shape(ls, ms, d);
  const AlphabetPtr& alphabet = ls.empty() ? ms[0].alphabet() : ls[0].alphabet();
  MatchingSums ms_sums;
  ms_sums.collect(d, ls.size(), ms.size());
  NCPoly out(alphabet);
  for (const auto& [masks, weight] : ms_sums.sums) {
    if (weight.is_zero()) continue;
    const unsigned h = std::popcount(masks.first);
    if (commutator_only && h % 2 == 0) continue;
    Scalar scale(1);
    mpz_class pow2 = 1;
    pow2 <<= commutator_only ? h - 1 : h;
    scale /= pow2;
    std::vector<NCPoly> rest;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (!((masks.first >> i) & 1U)) rest.push_back(ls[i]);
    }
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (!((masks.second >> j) & 1U)) rest.push_back(ms[j]);
    }
    out.add_scaled(sym(alphabet, rest), weight * scale);
  }
  return out;
}

}  // namespace

NCPoly wick_product(std::span<const NCPoly> ls, std::span<const NCPoly> ms,
                    const PairingMatrix& d) {
  return wick_sum(ls, ms, d, false);
}

NCPoly wick_commutator(std::span<const NCPoly> ls, std::span<const NCPoly> ms,
                       const PairingMatrix& d) {
  return wick_sum(ls, ms, d, true);
}

bool is_order_preserving_shuffle(const std::vector<unsigned>& sigma,
                                 std::size_t l, std::size_t m) {
  if (sigma.size() != l + m) return false;
  std::vector<bool> seen(l + m + 1, false);
  unsigned last_l = 0;
  unsigned last_m = static_cast<unsigned>(l);
  for (unsigned v : sigma) {
    if (v == 0 || v > l + m || seen[v]) return false;
    seen[v] = true;
    unsigned& last = v <= l ? last_l : last_m;
    if (v < last) return false;
    last = v;
  }
  return true;
}

NCPoly transposition_expand(std::span<const NCPoly> ls,
                            std::span<const NCPoly> ms, const PairingMatrix& d,
                            const std::vector<unsigned>& sigma) {
  check_shape(ls, ms, d);
  const std::size_t l = ls.size();
  const std::size_t m = ms.size();
  if (!is_order_preserving_shuffle(sigma, l, m)) {
    throw AlgebraError(ErrorKind::BadArgument,
                       "sigma must be a permutation of 1..l+m keeping the Ls "
                       "and the Ms in order");
  }
  const AlphabetPtr& alphabet = l == 0 ? ms[0].alphabet() : ls[0].alphabet();
  std::vector<std::size_t> pos(l + m + 1);
  for (std::size_t r = 0; r < sigma.size(); ++r) pos[sigma[r]] = r;

  // Gated pairing matrix: only pairs with L_i to the right of M_j survive.
  PairingMatrix gated(l, std::vector<CoeffPoly>(m));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (pos[i + 1] > pos[l + j + 1]) gated[i][j] = d[i][j];
    }
  }
  MatchingSums sums;
  sums.collect(gated, l, m);
  NCPoly out(alphabet);
  for (const auto& [masks, weight] : sums.sums) {
    if (weight.is_zero()) continue;
    NCPoly word = NCPoly::constant(alphabet, CoeffPoly(1L));
    for (unsigned v : sigma) {
      if (v <= l) {
        if ((masks.first >> (v - 1)) & 1U) continue;
        word = word * ls[v - 1];
      } else {
        if ((masks.second >> (v - l - 1)) & 1U) continue;
        word = word * ms[v - l - 1];
      }
    }
    out.add_scaled(word, weight);
  }
  return out;
}

CPoly moyal_bracket(const CPoly& h, const CPoly& f, std::size_t n) {
  require_same(h.alphabet(), f.alphabet());
  const AlphabetPtr& alphabet = h.alphabet();
  require_same(alphabet, canonical_system(n).b_alphabet());
  auto x = [](std::size_t i) { return static_cast<Letter>(i); };
  auto p = [n](std::size_t i) { return static_cast<Letter>(n + i); };

  // alpha_i <= min(deg_x H, deg_p F), beta_i <= min(deg_p H, deg_x F).
  std::vector<unsigned> amax(n), bmax(n);
  for (std::size_t i = 0; i < n; ++i) {
    amax[i] = std::min(h.degree_in(x(i)), f.degree_in(p(i)));
    bmax[i] = std::min(h.degree_in(p(i)), f.degree_in(x(i)));
  }

  CPoly out(alphabet);
  std::vector<unsigned> alpha(n, 0), beta(n, 0);
  // Odometer over alpha then beta.
  for (;;) {
    unsigned a_sum = std::accumulate(alpha.begin(), alpha.end(), 0U);
    unsigned b_sum = std::accumulate(beta.begin(), beta.end(), 0U);
    unsigned total = a_sum + b_sum;
    if (total % 2 == 1) {
      CPoly dh = h;
      CPoly df = f;
      Scalar denom = 1;
      for (std::size_t i = 0; i < n; ++i) {
        dh = derivative(derivative(dh, x(i), alpha[i]), p(i), beta[i]);
        df = derivative(derivative(df, x(i), beta[i]), p(i), alpha[i]);
        denom *= factorial(alpha[i]) * factorial(beta[i]);
      }
      if (!dh.is_zero() && !df.is_zero()) {
        mpz_class four_k = 1;
        four_k <<= total - 1;  // 2^(2k) with 2k = total - 1
        Scalar coeff = Scalar(a_sum % 2 == 0 ? 1 : -1) / (denom * four_k);
        out += (dh * df) * CoeffPoly(coeff);
      }
    }
    std::size_t i = 0;
    for (; i < 2 * n; ++i) {
      unsigned& digit = i < n ? alpha[i] : beta[i - n];
      unsigned limit = i < n ? amax[i] : bmax[i - n];
      if (digit < limit) {
        ++digit;
        break;
      }
      digit = 0;
    }
    if (i == 2 * n) break;
  }
  return out;
}

namespace {

struct PairingSystem {
  RelationSystem rel;
  std::vector<NCPoly> ls;
  std::vector<NCPoly> ms;
  PairingMatrix d;
};

// Constant system on L_1..L_l, M_1..M_m with [L_i, M_j] = d_ij and random
// constants among the Ls and among the Ms (the identities ignore those).
PairingSystem random_pairing_system(std::size_t l, std::size_t m, Rng& rng) {
  RelationSpec spec;
  spec.name = "pairing";
  for (std::size_t i = 1; i <= l; ++i) spec.generators.push_back("L" + std::to_string(i));
  for (std::size_t j = 1; j <= m; ++j) spec.generators.push_back("M" + std::to_string(j));
  const std::size_t n = l + m;
  PairingMatrix d(l, std::vector<CoeffPoly>(m));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Scalar v = random_rational(rng);
      if (a < l && b >= l) d[a][b - l] = CoeffPoly(v);
      if (v == 0) continue;
      spec.brackets.push_back({static_cast<Letter>(a), static_cast<Letter>(b),
                               {BracketTerm{std::nullopt, CoeffPoly(v)}}});
    }
  }
  PairingSystem s{RelationSystem(std::move(spec)), {}, {}, std::move(d)};
  for (std::size_t g = 0; g < n; ++g) {
    auto gen = NCPoly::generator(s.rel.b_alphabet(), static_cast<Letter>(g));
    (g < l ? s.ls : s.ms).push_back(gen);
  }
  return s;
}

std::string describe(const PairingMatrix& d) {
  std::string out = "d = [";
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < d[i].size(); ++j) {
      out += (j ? " " : "") + d[i][j].to_string();
    }
  }
  return out + "]";
}

void record(SweepResult& r, bool ok, const std::string& detail) {
  ++r.instances;
  if (ok) return;
  if (r.failures++ == 0) r.first_failure = detail;
}

}  // namespace

SweepResult verify_wick(std::size_t l, std::size_t m, std::size_t trials,
                        std::uint64_t seed) {
  require_range(l >= 1 && m >= 1, "wick needs l, m >= 1");
  SweepResult result;
  result.identity = "wick l=" + std::to_string(l) + " m=" + std::to_string(m);
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto s = random_pairing_system(l, m, rng);
    Rewriter rw(s.rel);
    NCPoly sl = sym(s.ls);
    NCPoly sm = sym(s.ms);
    bool ok = rw.normal_form(wick_product(s.ls, s.ms, s.d)) == rw.product(sl, sm);
    ok = ok && rw.normal_form(wick_commutator(s.ls, s.ms, s.d)) ==
                   rw.commutator(sl, sm);
    record(result, ok, "trial " + std::to_string(t) + ": " + describe(s.d));
  }
  return result;
}

SweepResult verify_transposition(std::size_t l, std::size_t m,
                                 std::size_t trials, std::uint64_t seed) {
  require_range(l >= 1 && m >= 1, "transposition needs l, m >= 1");
  SweepResult result;
  result.identity =
      "transposition l=" + std::to_string(l) + " m=" + std::to_string(m);
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto s = random_pairing_system(l, m, rng);
    // Random shuffle of the two ordered blocks.
    std::vector<bool> is_m(l + m, false);
    std::fill(is_m.begin() + l, is_m.end(), true);
    for (std::size_t i = is_m.size() - 1; i > 0; --i) {
      auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i)));
      std::swap(is_m[i], is_m[j]);
    }
    std::vector<unsigned> sigma;
    unsigned next_l = 1;
    unsigned next_m = static_cast<unsigned>(l) + 1;
    for (bool b : is_m) sigma.push_back(b ? next_m++ : next_l++);

    Rewriter rw(s.rel);
    NCPoly word = NCPoly::constant(s.rel.b_alphabet(), CoeffPoly(1L));
    for (const auto& g : s.ls) word = word * g;
    for (const auto& g : s.ms) word = word * g;
    bool ok = rw.normal_form(transposition_expand(s.ls, s.ms, s.d, sigma)) ==
              rw.normal_form(word);
    std::string sig;
    for (unsigned v : sigma) sig += std::to_string(v);
    record(result, ok, "trial " + std::to_string(t) + ": sigma = (" + sig +
                           "), " + describe(s.d));
  }
  return result;
}

SweepResult verify_moyal(std::size_t n, unsigned deg, std::size_t trials,
                         std::uint64_t seed) {
  require_range(n >= 1, "moyal needs n >= 1");
  SweepResult result;
  result.identity = "moyal n=" + std::to_string(n) + " deg=" + std::to_string(deg);
  RelationSystem rel = canonical_system(n);
  Rewriter rw(rel);
  Rng rng(seed);
  RandomPolyShape shape{.max_degree = deg, .max_terms = 4};
  for (std::size_t t = 0; t < trials; ++t) {
    CPoly h = random_cpoly(rel.b_alphabet(), rng, shape);
    CPoly f = random_cpoly(rel.b_alphabet(), rng, shape);
    NCPoly lhs = rw.commutator(symmetrize(h), symmetrize(f));
    NCPoly rhs = rw.normal_form(symmetrize(moyal_bracket(h, f, n)));
    record(result, lhs == rhs,
           "trial " + std::to_string(t) + ": H = " + to_string(h) +
               ", F = " + to_string(f));
  }
  return result;
}

}  // namespace symq
