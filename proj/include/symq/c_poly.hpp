#pragma once

#include <map>
#include <string>

#include "symq/alphabet.hpp"
#include "symq/coeff_poly.hpp"

namespace symq {

// Total degree first, then the order of the sorted letter words: x^2 before
// x*p before p^2 when x precedes p in the alphabet.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Commutative polynomial over the generators of an Alphabet with CoeffPoly
// coefficients. Exponent vectors are dense, one entry per generator.
class CPoly {
 public:
  using TermMap = std::map<Exponents, CoeffPoly, MonomialOrder>;

  explicit CPoly(AlphabetPtr alphabet);

  static CPoly constant(AlphabetPtr alphabet, const CoeffPoly& c);
  static CPoly generator(AlphabetPtr alphabet, Letter g);
  static CPoly monomial(AlphabetPtr alphabet, Exponents e,
                        const CoeffPoly& c = CoeffPoly(1L));

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Total degree in the generators; parameters do not count. 0 for zero.
  unsigned degree() const;
  unsigned degree_in(Letter g) const;

  void add_term(const Exponents& e, const CoeffPoly& c);

  CPoly& operator+=(const CPoly& other);
  CPoly& operator-=(const CPoly& other);
  CPoly& operator*=(const CoeffPoly& c);
  CPoly operator-() const;

  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(CPoly a, const CoeffPoly& c) { return a *= c; }
  friend CPoly operator*(const CoeffPoly& c, CPoly a) { return a *= c; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);

  friend bool operator==(const CPoly& a, const CPoly& b);

 private:
  AlphabetPtr alphabet_;
  TermMap terms_;
};

CPoly pow(const CPoly& base, unsigned exponent);
CPoly derivative(const CPoly& p, Letter g, unsigned order = 1);

// Inclusion into an alphabet whose generator list starts with p's generators
// (B inside T). Throws ContextMismatch if the prefix does not match.
CPoly embed(const CPoly& p, AlphabetPtr wider);

// Renders e.g. "x^2*p - 3/2"; parses back with parse_expr.
std::string to_string(const CPoly& p);

}  // namespace symq
