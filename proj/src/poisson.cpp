#include "symq/poisson.hpp"

#include <optional>
#include <vector>

#include "symq/errors.hpp"

namespace symq {

CPoly leibniz_bracket(const CPoly& h, const CPoly& f,
                      const RelationSystem& rel) {
  require_same(h.alphabet(), rel.b_alphabet());
  require_same(f.alphabet(), rel.b_alphabet());
  const std::size_t l = rel.l();
  const AlphabetPtr& t = rel.t_alphabet();

  std::vector<std::optional<CPoly>> dh(l), df(l);
  for (std::size_t i = 0; i < l; ++i) {
    auto g = static_cast<Letter>(i);
    if (h.degree_in(g) > 0) dh[i] = embed(derivative(h, g), t);
    if (f.degree_in(g) > 0) df[i] = embed(derivative(f, g), t);
  }

  CPoly out(t);
  for (std::size_t i = 0; i < l; ++i) {
    if (!dh[i]) continue;
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j || !df[j]) continue;
      auto a = static_cast<Letter>(i), b = static_cast<Letter>(j);
      if (rel.bracket(a, b).is_zero()) continue;
      out += rel.bracket_c(a, b) * (*dh[i] * *df[j]);
    }
  }
  return out;
}

bool casimir_check(const CPoly& c, const RelationSystem& rel) {
  if (rel.bracket_case() != BracketCase::Linear) {
    throw AlgebraError(ErrorKind::UnsupportedCase,
                       "Casimir functions are defined for linear systems only");
  }
  for (std::size_t g = 0; g < rel.l(); ++g) {
    auto gen = CPoly::generator(rel.b_alphabet(), static_cast<Letter>(g));
    if (!leibniz_bracket(c, gen, rel).is_zero()) return false;
  }
  return true;
}

}  // namespace symq
