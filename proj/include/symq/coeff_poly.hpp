#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symq/scalar.hpp"

namespace symq {

using Exponents = std::vector<std::uint16_t>;

// Commutative polynomial in the central parameters D with exact rational
// coefficients. Exponent vectors are stored without trailing zeros, so a
// parameter-free value is a single term keyed by the empty vector and the
// type needs no knowledge of how many parameters the context declares.
class CoeffPoly {
 public:
  using Term = std::pair<Exponents, Scalar>;

  CoeffPoly() = default;
  CoeffPoly(const Scalar& value);  // NOLINT(google-explicit-constructor)
  CoeffPoly(long value);           // NOLINT(google-explicit-constructor)

  static CoeffPoly param(std::size_t index, unsigned power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty());
  }
  Scalar constant_term() const;
  // Highest parameter index used plus one.
  std::size_t param_width() const;
  unsigned degree() const;

  const std::vector<Term>& terms() const { return terms_; }

  CoeffPoly& operator+=(const CoeffPoly& other);
  CoeffPoly& operator-=(const CoeffPoly& other);
  CoeffPoly& operator*=(const CoeffPoly& other);
  CoeffPoly& operator*=(const Scalar& factor);
  CoeffPoly operator-() const;

  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator*(CoeffPoly a, const Scalar& b) { return a *= b; }

  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) {
    return a.terms_ == b.terms_;
  }

  // Renders with the given parameter names; falls back to "D<i>" for
  // indices beyond the list.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void merge(const CoeffPoly& other, bool subtract);

  std::vector<Term> terms_;  // strictly increasing exponents, no zeros
};

}  // namespace symq
