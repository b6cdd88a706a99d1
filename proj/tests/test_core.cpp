#include <doctest.h>

#include "support.hpp"
#include "symq/errors.hpp"
#include "symq/freealg.hpp"

using namespace symq;
using symq::test::gen;
using symq::test::one;

TEST_CASE("scalar parsing") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-6/4") == Scalar(-3, 2));
  CHECK(parse_scalar("+1/3") == Scalar(1, 3));
  CHECK_THROWS_AS(parse_scalar("1/0"), AlgebraError);
  CHECK_THROWS_AS(parse_scalar("x"), AlgebraError);
  CHECK(to_string(Scalar(-3, 2)) == "-3/2");
  CHECK(factorial(6) == 720);
}

TEST_CASE("coefficient polynomials") {
  CoeffPoly d0 = CoeffPoly::param(0);
  CoeffPoly d1 = CoeffPoly::param(1);
  CoeffPoly p = (d0 + d1) * (d0 - d1);
  CHECK(p == d0 * d0 - d1 * d1);
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(CoeffPoly(Scalar(2, 3)).is_constant());
  CHECK(CoeffPoly(5L).constant_term() == 5);
  std::vector<std::string> names{"a", "b"};
  CHECK(d0.to_string(names) == "a");
}

TEST_CASE("free algebra products and zero elimination") {
  auto a = make_alphabet({"x", "p"});
  NCPoly x = gen(a, 0);
  NCPoly p = gen(a, 1);
  NCPoly c = commutator(p, x);
  CHECK(c.size() == 2);
  CHECK((c + commutator(x, p)).is_zero());
  CHECK(to_string(x * x * p) == "x^2*p");
  CHECK((x * p).degree() == 2);
}

TEST_CASE("degree cap is enforced") {
  auto a = make_alphabet({"x"}, {}, Limits{3, 8});
  NCPoly x = gen(a, 0);
  CHECK_THROWS_AS(x * x * x * x, AlgebraError);
}

TEST_CASE("mixing alphabets is refused") {
  auto a = make_alphabet({"x"});
  auto b = make_alphabet({"y"});
  CHECK_THROWS_AS(gen(a, 0) + gen(b, 0), AlgebraError);
}

TEST_CASE("commutative polynomials") {
  auto a = make_alphabet({"x", "p"});
  CPoly x = CPoly::generator(a, 0);
  CPoly p = CPoly::generator(a, 1);
  CPoly f = pow(x + p, 3);
  CHECK(f.size() == 4);
  CHECK(derivative(f, 0) == pow(x + p, 2) * CoeffPoly(3L));
  CHECK(derivative(f, 1, 4).is_zero());
  CHECK(f.degree() == 3);
  CHECK(f.degree_in(1) == 3);
  CHECK(to_string(x * x * p) == "x^2*p");
}

TEST_CASE("sym examples") {
  auto a = make_alphabet({"B1", "B2"});
  NCPoly b1 = gen(a, 0);
  NCPoly b2 = gen(a, 1);
  CHECK(sym({b1, b2}) == (b1 * b2 + b2 * b1) * CoeffPoly(Scalar(1, 2)));
  CHECK(sym({b1, b1, b2}) ==
        (b1 * b1 * b2 + b1 * b2 * b1 + b2 * b1 * b1) * CoeffPoly(Scalar(1, 3)));
  CHECK(sym({b1}) == b1);
  CHECK(diamond(b1, b2) == sym({b2, b1}));
}

TEST_CASE("sym matches brute force on general arguments") {
  auto a = make_alphabet({"a", "b", "c"});
  NCPoly u = gen(a, 0) * gen(a, 1) + gen(a, 2);
  NCPoly v = gen(a, 2) * CoeffPoly(Scalar(-1, 2)) + one(a);
  NCPoly w = gen(a, 1);
  std::vector<NCPoly> args{u, v, u, w};
  CHECK(sym(args) == symq::test::brute_sym(args));
}

TEST_CASE("sym cap and empty arguments") {
  auto a = make_alphabet({"x"}, {}, Limits{12, 3});
  NCPoly x = gen(a, 0);
  CHECK_THROWS_AS(sym({x, x, x, x}), AlgebraError);
  std::vector<NCPoly> none;
  CHECK_THROWS_AS(sym(std::span<const NCPoly>(none)), AlgebraError);
  CHECK(sym(a, none) == one(a));
}

TEST_CASE("abelianize") {
  auto a = make_alphabet({"x", "p"});
  NCPoly x = gen(a, 0);
  NCPoly p = gen(a, 1);
  CHECK(abelianize(commutator(x, p)).is_zero());
  CHECK(abelianize(p * x * x) == pow(CPoly::generator(a, 0), 2) *
                                     CPoly::generator(a, 1));
}
