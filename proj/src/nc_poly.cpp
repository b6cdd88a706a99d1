#include "symq/nc_poly.hpp"

#include <sstream>

#include "format.hpp"
#include "symq/errors.hpp"

namespace symq {

NCPoly::NCPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) {
    throw AlgebraError(ErrorKind::ContextMismatch, "null alphabet");
  }
}

NCPoly NCPoly::constant(AlphabetPtr alphabet, const CoeffPoly& c) {
  return monomial(std::move(alphabet), Word{}, c);
}

NCPoly NCPoly::generator(AlphabetPtr alphabet, Letter g) {
  if (g >= alphabet->size()) {
    throw AlgebraError(ErrorKind::BadArgument,
                       "generator index out of range");
  }
  return monomial(std::move(alphabet), Word{g});
}

NCPoly NCPoly::monomial(AlphabetPtr alphabet, Word word, const CoeffPoly& c) {
  NCPoly p(std::move(alphabet));
  if (word.size() > p.alphabet_->limits().degree_cap) {
    throw AlgebraError(ErrorKind::DegreeCapExceeded,
                       "word length exceeds degree cap");
  }
  p.add_term(word, c);
  return p;
}

std::size_t NCPoly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

void NCPoly::add_term(const Word& word, const CoeffPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::add_scaled(const NCPoly& other, const CoeffPoly& c) {
  require_same(alphabet_, other.alphabet_);
  if (c.is_zero()) return;
  for (const auto& [w, k] : other.terms_) add_term(w, k * c);
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  require_same(alphabet_, other.alphabet_);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
  require_same(alphabet_, other.alphabet_);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const CoeffPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  require_same(a.alphabet_, b.alphabet_);
  NCPoly out(a.alphabet_);
  const std::size_t cap = a.alphabet_->limits().degree_cap;
  Word w;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      if (wa.size() + wb.size() > cap) {
        throw AlgebraError(ErrorKind::DegreeCapExceeded,
                           "product exceeds degree cap of " +
                               std::to_string(cap));
      }
      w.assign(wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  return a.alphabet_->same_as(*b.alphabet_) && a.terms_ == b.terms_;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

std::string word_to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (i > 0) os << '*';
    os << alphabet.name(w[i]);
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

namespace detail {

std::string format_term_sum(
    const std::vector<std::pair<std::string, const CoeffPoly*>>& terms,
    const std::vector<std::string>& params) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [monomial, c] : terms) {
    const bool unit_monomial = monomial == "1";
    if (c->terms().size() == 1) {
      const bool negative = c->terms()[0].second < 0;
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      std::string body = (negative ? -*c : *c).to_string(params);
      if (unit_monomial)
        os << body;
      else if (body == "1")
        os << monomial;
      else
        os << body << '*' << monomial;
    } else {
      if (!first) os << " + ";
      os << '(' << c->to_string(params) << ')';
      if (!unit_monomial) os << '*' << monomial;
    }
    first = false;
  }
  return os.str();
}

}  // namespace detail

std::string to_string(const NCPoly& p) {
  std::vector<std::pair<std::string, const CoeffPoly*>> terms;
  for (const auto& [w, c] : p.terms()) {
    terms.emplace_back(word_to_string(w, *p.alphabet()), &c);
  }
  return detail::format_term_sum(terms, p.alphabet()->central_params());
}

}  // namespace symq
