#pragma once

#include <map>
#include <string>
#include <vector>

#include "symq/alphabet.hpp"
#include "symq/coeff_poly.hpp"

namespace symq {

// A word of the free monoid; the empty word is the identity.
using Word = std::vector<Letter>;

// Shorter words first, then lexicographic on letter indices.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Element of the free associative algebra over an Alphabet with CoeffPoly
// coefficients. Zero coefficients are never stored, so term-map equality is
// equality in the free algebra.
class NCPoly {
 public:
  using TermMap = std::map<Word, CoeffPoly, WordOrder>;

  explicit NCPoly(AlphabetPtr alphabet);

  static NCPoly constant(AlphabetPtr alphabet, const CoeffPoly& c);
  static NCPoly generator(AlphabetPtr alphabet, Letter g);
  static NCPoly monomial(AlphabetPtr alphabet, Word word,
                         const CoeffPoly& c = CoeffPoly(1L));

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;
  std::size_t size() const { return terms_.size(); }

  // Adds c * word, dropping the entry if it cancels.
  void add_term(const Word& word, const CoeffPoly& c);
  void add_scaled(const NCPoly& other, const CoeffPoly& c);

  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);
  NCPoly& operator*=(const CoeffPoly& c);
  NCPoly operator-() const;

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const CoeffPoly& c) { return a *= c; }
  friend NCPoly operator*(const CoeffPoly& c, NCPoly a) { return a *= c; }
  // Concatenation product. Throws DegreeCapExceeded past the alphabet cap.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

  friend bool operator==(const NCPoly& a, const NCPoly& b);

 private:
  AlphabetPtr alphabet_;
  TermMap terms_;
};

NCPoly commutator(const NCPoly& a, const NCPoly& b);

// Renders e.g. "1/2*x*p + 1/2*p*x"; consecutive repeats print as powers.
std::string to_string(const NCPoly& p);
std::string word_to_string(const Word& w, const Alphabet& alphabet);

}  // namespace symq
