#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "symq/freealg.hpp"
#include "symq/identities.hpp"
#include "symq/poisson.hpp"
#include "symq/random.hpp"
#include "symq/symmetrization.hpp"

using namespace symq;

namespace {

constexpr std::size_t kTrials = 40;

// {p, x} = a, {y, x} = b + 1, {p, y} = 2 with central a, b.
RelationSystem parametric_constant() {
  RelationSpec spec;
  spec.name = "parametric";
  spec.bracket_case = BracketCase::Constant;
  spec.generators = {"x", "p", "y"};
  spec.central_params = {"a", "b"};
  spec.brackets = {{1, 0, {{std::nullopt, CoeffPoly::param(0)}}},
                   {2, 0, {{std::nullopt, CoeffPoly::param(1) + CoeffPoly(1L)}}},
                   {1, 2, {{std::nullopt, CoeffPoly(2L)}}}};
  return RelationSystem(spec);
}

// so(3) with every structure constant scaled by a central g.
RelationSystem parametric_so3() {
  RelationSpec spec = so3_system().spec();
  spec.name = "so3_g";
  spec.central_params = {"g"};
  for (auto& b : spec.brackets) b.terms[0].coeff = CoeffPoly::param(0);
  return RelationSystem(spec);
}

RelationSystem general_system() {
  RelationSpec spec;
  spec.name = "quadratic";
  spec.bracket_case = BracketCase::General;
  spec.generators = {"B1", "B2"};
  spec.extended_generators = {"T3"};
  spec.central_params = {"c"};
  spec.brackets = {{0, 1, {{Letter{2}, CoeffPoly(1L)}, {Letter{1}, CoeffPoly::param(0)}}}};
  return RelationSystem(spec);
}

std::vector<RelationSystem> rewritable_systems() {
  return {canonical_system(2), so3_system(), heisenberg_system(),
          parametric_constant(), parametric_so3()};
}

}  // namespace

TEST_CASE("abelianize inverts symmetrize; symmetrize is linear") {
  Rng rng(1);
  auto a = make_alphabet({"u", "v", "w"}, {"d"});
  for (std::size_t t = 0; t < kTrials; ++t) {
    CPoly p = random_cpoly(a, rng, {.max_degree = 5, .max_terms = 4, .params = 1});
    CPoly q = random_cpoly(a, rng, {.max_degree = 4, .max_terms = 4, .params = 1});
    CoeffPoly s = random_coeff(rng, 1);
    CHECK(abelianize(symmetrize(p)) == p);
    CHECK(symmetrize(p * s + q) == symmetrize(p) * s + symmetrize(q));
  }
}

TEST_CASE("sym is invariant under permuting its arguments") {
  Rng rng(2);
  auto a = make_alphabet({"u", "v", "w"});
  for (std::size_t t = 0; t < kTrials; ++t) {
    std::size_t k = static_cast<std::size_t>(rng.uniform(2, 4));
    std::vector<NCPoly> args;
    for (std::size_t i = 0; i < k; ++i) {
      args.push_back(random_ncpoly(a, rng, {.max_degree = 2, .max_terms = 2}));
    }
    NCPoly base = sym(args);
    for (std::size_t i = args.size() - 1; i > 0; --i) {
      std::swap(args[i], args[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i)))]);
    }
    CHECK(sym(args) == base);
    if (t < 10) CHECK(base == symq::test::brute_sym(args));
  }
}

TEST_CASE("normal form is an idempotent quotient map") {
  Rng rng(3);
  for (const auto& rel : rewritable_systems()) {
    Rewriter rw(rel);
    auto a = rel.b_alphabet();
    std::size_t params = rel.spec().central_params.size();
    for (std::size_t t = 0; t < kTrials / 2; ++t) {
      RandomPolyShape shape{.max_degree = 4, .max_terms = 3, .params = params};
      NCPoly u = random_ncpoly(a, rng, shape);
      NCPoly v = random_ncpoly(a, rng, shape);
      NCPoly nu = rw.normal_form(u);
      CHECK(rw.normal_form(nu) == nu);
      CHECK(rw.normal_form(u * v) == rw.normal_form(nu * rw.normal_form(v)));
      CHECK(rw.normal_form(u + v) == nu + rw.normal_form(v));
      for (const auto& [w, c] : nu.terms()) CHECK(std::is_sorted(w.begin(), w.end()));
    }
  }
}

TEST_CASE("normal form of a generator commutator is the relation value") {
  for (const auto& rel : rewritable_systems()) {
    Rewriter rw(rel);
    auto a = rel.b_alphabet();
    for (Letter i = 0; i < rel.l(); ++i) {
      for (Letter j = 0; j < rel.l(); ++j) {
        CHECK(rw.commutator(symq::test::gen(a, i), symq::test::gen(a, j)) ==
              rel.bracket_nc(i, j));
      }
    }
  }
}

TEST_CASE("canonical normal form only sorts words in x alone or p alone") {
  Rng rng(4);
  for (std::size_t n : {1, 2}) {
    auto rel = canonical_system(n);
    Rewriter rw(rel);
    for (std::size_t t = 0; t < kTrials; ++t) {
      bool ps = rng.coin();
      Word w;
      auto len = rng.uniform(0, 6);
      for (std::int64_t i = 0; i < len; ++i) {
        auto g = rng.uniform(0, static_cast<std::int64_t>(n) - 1);
        w.push_back(static_cast<Letter>(g + (ps ? static_cast<std::int64_t>(n) : 0)));
      }
      Word sorted = w;
      std::sort(sorted.begin(), sorted.end());
      NCPoly m = NCPoly::monomial(rel.b_alphabet(), w);
      CHECK(rw.normal_form(m) == NCPoly::monomial(rel.b_alphabet(), sorted));
      if (n == 1) CHECK(rw.normal_form(m) == m);
    }
  }
}

TEST_CASE("canonical normal form agrees with the differential realization") {
  for (std::size_t n : {1, 2}) {
    auto rel = canonical_system(n);
    Rewriter rw(rel);
    symq::test::DiffRealization diff(n);
    Rng rng(5 + n);
    for (std::size_t t = 0; t < kTrials / 2; ++t) {
      NCPoly u = random_ncpoly(rel.b_alphabet(), rng, {.max_degree = 5, .max_terms = 3});
      CHECK(diff.equal(u, rw.normal_form(u)));
    }
  }
}

TEST_CASE("substituting commutator agrees with the rewriting commutator") {
  Rng rng(6);
  for (const auto& rel : rewritable_systems()) {
    Rewriter rw(rel);
    auto a = rel.b_alphabet();
    for (std::size_t t = 0; t < kTrials / 4; ++t) {
      NCPoly u = random_ncpoly(a, rng, {.max_degree = 4, .max_terms = 3});
      auto i = static_cast<Letter>(rng.uniform(0, static_cast<std::int64_t>(rel.l()) - 1));
      CHECK(rw.normal_form(substituting_commutator(i, u, rel)) ==
            rw.commutator(symq::test::gen(a, i), u));
    }
  }
}

TEST_CASE("leibniz bracket: antisymmetry, Leibniz rule, Jacobi") {
  Rng rng(7);
  for (const auto& rel : rewritable_systems()) {
    auto a = rel.b_alphabet();
    std::size_t params = rel.spec().central_params.size();
    RandomPolyShape shape{.max_degree = 3, .max_terms = 3, .params = params};
    for (std::size_t t = 0; t < kTrials / 4; ++t) {
      CPoly h = random_cpoly(a, rng, shape);
      CPoly f = random_cpoly(a, rng, shape);
      CPoly g = random_cpoly(a, rng, shape);
      CHECK(leibniz_bracket(h, f, rel) == -leibniz_bracket(f, h, rel));
      CHECK(leibniz_bracket(h, f * g, rel) ==
            leibniz_bracket(h, f, rel) * g + f * leibniz_bracket(h, g, rel));
      CPoly jac = leibniz_bracket(h, leibniz_bracket(f, g, rel), rel) +
                  leibniz_bracket(f, leibniz_bracket(g, h, rel), rel) +
                  leibniz_bracket(g, leibniz_bracket(h, f, rel), rel);
      CHECK(jac.is_zero());
    }
  }
}

TEST_CASE("correspondence: constant case, deg H <= 2") {
  Rng rng(8);
  for (const auto& rel : {canonical_system(1), canonical_system(2), parametric_constant()}) {
    Rewriter rw(rel);
    std::size_t params = rel.spec().central_params.size();
    for (std::size_t t = 0; t < kTrials / 4; ++t) {
      CPoly h = random_cpoly(rel.b_alphabet(), rng,
                             {.max_degree = 2, .max_terms = 4, .params = params});
      CPoly f = random_cpoly(rel.b_alphabet(), rng,
                             {.max_degree = 5, .max_terms = 3, .params = params});
      auto r = bracket_correspondence(h, f, rw);
      CHECK_MESSAGE(r.equal, to_string(h) << " | " << to_string(f));
    }
  }
}

TEST_CASE("correspondence: linear case, affine H") {
  Rng rng(9);
  for (const auto& rel : {so3_system(), heisenberg_system(), parametric_so3()}) {
    Rewriter rw(rel);
    std::size_t params = rel.spec().central_params.size();
    for (std::size_t t = 0; t < kTrials / 4; ++t) {
      CPoly h = random_affine(rel.b_alphabet(), rng, params);
      CPoly f = random_cpoly(rel.b_alphabet(), rng,
                             {.max_degree = 4, .max_terms = 3, .params = params});
      CHECK(bracket_correspondence(h, f, rw).equal);
    }
  }
}

TEST_CASE("correspondence: general case, affine H") {
  Rng rng(10);
  auto rel = general_system();
  for (std::size_t t = 0; t < kTrials / 2; ++t) {
    CPoly h = random_affine(rel.b_alphabet(), rng, 1);
    CPoly f = random_cpoly(rel.b_alphabet(), rng,
                           {.max_degree = 4, .max_terms = 3, .params = 1});
    CHECK(bracket_correspondence(h, f, rel).equal);
  }
}

TEST_CASE("moyal: antisymmetry, k = 0 part, degree drop") {
  Rng rng(11);
  for (std::size_t n : {1, 2}) {
    auto rel = canonical_system(n);
    auto a = rel.b_alphabet();
    for (std::size_t t = 0; t < kTrials / 2; ++t) {
      CPoly h = random_cpoly(a, rng, {.max_degree = 4, .max_terms = 3});
      CPoly f = random_cpoly(a, rng, {.max_degree = 4, .max_terms = 3});
      CPoly g = moyal_bracket(h, f, n);
      CHECK(g == -moyal_bracket(f, h, n));
      // Past k = 0 every term carries at least three derivatives per side.
      CPoly higher = g - leibniz_bracket(h, f, rel);
      if (!higher.is_zero()) {
        CHECK(higher.degree() + 6 <= h.degree() + f.degree());
      }
      CPoly q = random_cpoly(a, rng, {.max_degree = 2, .max_terms = 3});
      CHECK(moyal_bracket(q, f, n) == leibniz_bracket(q, f, rel));
    }
  }
}
