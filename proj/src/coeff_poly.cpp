#include "symq/coeff_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symq {

namespace {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  const Exponents& longer = a.size() >= b.size() ? a : b;
  const Exponents& shorter = a.size() >= b.size() ? b : a;
  Exponents out = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) out[i] += shorter[i];
  return out;
}

}  // namespace

CoeffPoly::CoeffPoly(const Scalar& value) {
  if (value != 0) terms_.emplace_back(Exponents{}, value);
}

CoeffPoly::CoeffPoly(long value) : CoeffPoly(Scalar(value)) {}

CoeffPoly CoeffPoly::param(std::size_t index, unsigned power) {
  CoeffPoly p;
  if (power == 0) return CoeffPoly(1L);
  Exponents e(index + 1, 0);
  e[index] = static_cast<std::uint16_t>(power);
  p.terms_.emplace_back(std::move(e), Scalar(1));
  return p;
}

Scalar CoeffPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].first.empty()) return terms_[0].second;
  return Scalar(0);
}

std::size_t CoeffPoly::param_width() const {
  std::size_t w = 0;
  for (const auto& [e, c] : terms_) w = std::max(w, e.size());
  return w;
}

unsigned CoeffPoly::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max<unsigned>(d, std::accumulate(e.begin(), e.end(), 0u));
  }
  return d;
}

void CoeffPoly::merge(const CoeffPoly& other, bool subtract) {
  if (other.terms_.empty()) return;
  // Fast path for the parameter-free case.
  if (terms_.size() == 1 && other.terms_.size() == 1 &&
      terms_[0].first == other.terms_[0].first) {
    if (subtract)
      terms_[0].second -= other.terms_[0].second;
    else
      terms_[0].second += other.terms_[0].second;
    if (terms_[0].second == 0) terms_.clear();
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, subtract ? Scalar(-b->second) : b->second);
      ++b;
    } else {
      Scalar s = subtract ? Scalar(a->second - b->second)
                          : Scalar(a->second + b->second);
      if (s != 0) out.emplace_back(std::move(a->first), std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& other) {
  merge(other, false);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& other) {
  merge(other, true);
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    out.terms_.emplace_back(add_exponents(a.terms_[0].first, b.terms_[0].first),
                            a.terms_[0].second * b.terms_[0].second);
    return out;
  }
  std::vector<CoeffPoly::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      raw.emplace_back(add_exponents(ea, eb), ca * cb);
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& other) {
  *this = *this * other;
  return *this;
}

CoeffPoly& CoeffPoly::operator*=(const Scalar& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= factor;
  return *this;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

std::string CoeffPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (e.empty() || mag != 1) {
      os << symq::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      if (i < names.size())
        os << names[i];
      else
        os << 'D' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace symq
