#include "symq/c_poly.hpp"

#include <numeric>
#include <sstream>

#include "format.hpp"
#include "symq/errors.hpp"

namespace symq {

namespace {

unsigned total(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total(a), db = total(b);
  if (da != db) return da < db;
  return b < a;
}

CPoly::CPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) {
    throw AlgebraError(ErrorKind::ContextMismatch, "null alphabet");
  }
}

CPoly CPoly::constant(AlphabetPtr alphabet, const CoeffPoly& c) {
  Exponents zero(alphabet->size(), 0);
  return monomial(std::move(alphabet), std::move(zero), c);
}

CPoly CPoly::generator(AlphabetPtr alphabet, Letter g) {
  if (g >= alphabet->size()) {
    throw AlgebraError(ErrorKind::BadArgument, "generator index out of range");
  }
  Exponents e(alphabet->size(), 0);
  e[g] = 1;
  return monomial(std::move(alphabet), std::move(e));
}

CPoly CPoly::monomial(AlphabetPtr alphabet, Exponents e, const CoeffPoly& c) {
  CPoly p(std::move(alphabet));
  p.add_term(e, c);
  return p;
}

unsigned CPoly::degree() const {
  return terms_.empty() ? 0 : total(terms_.rbegin()->first);
}

unsigned CPoly::degree_in(Letter g) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e.at(g));
  return d;
}

void CPoly::add_term(const Exponents& e, const CoeffPoly& c) {
  if (e.size() != alphabet_->size()) {
    throw AlgebraError(ErrorKind::ContextMismatch,
                       "exponent vector width does not match alphabet");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CPoly& CPoly::operator+=(const CPoly& other) {
  require_same(alphabet_, other.alphabet_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& other) {
  require_same(alphabet_, other.alphabet_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

CPoly& CPoly::operator*=(const CoeffPoly& c) {
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

CPoly CPoly::operator-() const {
  CPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  require_same(a.alphabet_, b.alphabet_);
  CPoly out(a.alphabet_);
  Exponents e(a.alphabet_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const CPoly& a, const CPoly& b) {
  return a.alphabet_->same_as(*b.alphabet_) && a.terms_ == b.terms_;
}

CPoly pow(const CPoly& base, unsigned exponent) {
  CPoly result = CPoly::constant(base.alphabet(), CoeffPoly(1L));
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

CPoly derivative(const CPoly& p, Letter g, unsigned order) {
  if (g >= p.alphabet()->size()) {
    throw AlgebraError(ErrorKind::BadArgument, "generator index out of range");
  }
  CPoly out(p.alphabet());
  for (const auto& [e, c] : p.terms()) {
    if (e[g] < order) continue;
    // falling factorial e (e-1) ... (e-order+1)
    long factor = 1;
    for (unsigned k = 0; k < order; ++k) factor *= static_cast<long>(e[g] - k);
    Exponents d = e;
    d[g] = static_cast<std::uint16_t>(e[g] - order);
    out.add_term(d, c * Scalar(factor));
  }
  return out;
}

CPoly embed(const CPoly& p, AlphabetPtr wider) {
  const auto& narrow = p.alphabet()->generators();
  const auto& wide = wider->generators();
  bool prefix = narrow.size() <= wide.size() &&
                std::equal(narrow.begin(), narrow.end(), wide.begin()) &&
                p.alphabet()->central_params() == wider->central_params();
  if (!prefix) {
    throw AlgebraError(ErrorKind::ContextMismatch,
                       "target alphabet does not extend the source alphabet");
  }
  CPoly out(wider);
  for (const auto& [e, c] : p.terms()) {
    Exponents w(wide.size(), 0);
    std::copy(e.begin(), e.end(), w.begin());
    out.add_term(w, c);
  }
  return out;
}

std::string to_string(const CPoly& p) {
  const Alphabet& a = *p.alphabet();
  std::vector<std::pair<std::string, const CoeffPoly*>> terms;
  for (const auto& [e, c] : p.terms()) {
    std::ostringstream m;
    bool wrote = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) m << '*';
      m << a.name(static_cast<Letter>(i));
      if (e[i] > 1) m << '^' << e[i];
      wrote = true;
    }
    terms.emplace_back(wrote ? m.str() : std::string("1"), &c);
  }
  return detail::format_term_sum(terms, a.central_params());
}

}  // namespace symq
