#include "symq/freealg.hpp"

#include <algorithm>
#include <vector>

#include "symq/errors.hpp"

namespace symq {

namespace {

// Single generators with unit coefficient: enumerate distinct letter
// arrangements directly.
bool all_plain_generators(std::span<const NCPoly> args, Word& letters) {
  letters.clear();
  for (const auto& a : args) {
    if (a.size() != 1) return false;
    const auto& [w, c] = *a.terms().begin();
    if (w.size() != 1 || !(c == CoeffPoly(1L))) return false;
    letters.push_back(w[0]);
  }
  return true;
}

NCPoly sym_of_letters(const AlphabetPtr& alphabet, Word letters) {
  std::sort(letters.begin(), letters.end());
  // Each distinct arrangement occurs prod(multiplicity!) times among k!.
  Scalar weight = 1;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    weight *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  weight /= factorial(static_cast<unsigned>(letters.size()));
  NCPoly out(alphabet);
  CoeffPoly c(weight);
  do {
    out.add_term(letters, c);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

struct SymExpansion {
  const std::vector<const NCPoly*>& classes;
  std::vector<std::size_t>& remaining;
  NCPoly& out;
  const CoeffPoly& weight;

  void run(const NCPoly& prefix, std::size_t depth, std::size_t k) {
    if (depth == k) {
      out.add_scaled(prefix, weight);
      return;
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (remaining[c] == 0) continue;
      --remaining[c];
      run(prefix * *classes[c], depth + 1, k);
      ++remaining[c];
    }
  }
};

}  // namespace

NCPoly sym(std::span<const NCPoly> args) {
  if (args.empty()) {
    throw AlgebraError(ErrorKind::BadArgument,
                       "sym of an empty argument list needs an alphabet");
  }
  const AlphabetPtr& alphabet = args[0].alphabet();
  for (const auto& a : args) require_same(alphabet, a.alphabet());
  const std::size_t k = args.size();
  if (k > alphabet->limits().sym_cap) {
    throw AlgebraError(ErrorKind::SymCapExceeded,
                       "sym_k with k = " + std::to_string(k) +
                           " exceeds the cap of " +
                           std::to_string(alphabet->limits().sym_cap));
  }
  if (k == 1) return args[0];

  Word letters;
  if (all_plain_generators(args, letters)) {
    if (letters.size() > alphabet->limits().degree_cap) {
      throw AlgebraError(ErrorKind::DegreeCapExceeded,
                         "sym_k result exceeds degree cap");
    }
    return sym_of_letters(alphabet, std::move(letters));
  }

  // Group equal arguments; each distinct arrangement of classes stands for
  // prod(count!) of the k! orderings.
  std::vector<const NCPoly*> classes;
  std::vector<std::size_t> counts;
  for (const auto& a : args) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const NCPoly* p) { return *p == a; });
    if (it == classes.end()) {
      classes.push_back(&a);
      counts.push_back(1);
    } else {
      ++counts[static_cast<std::size_t>(it - classes.begin())];
    }
  }
  Scalar w = 1;
  for (auto c : counts) w *= factorial(static_cast<unsigned>(c));
  w /= factorial(static_cast<unsigned>(k));
  CoeffPoly weight(w);

  NCPoly out(alphabet);
  SymExpansion expansion{classes, counts, out, weight};
  expansion.run(NCPoly::constant(alphabet, CoeffPoly(1L)), 0, k);
  return out;
}

NCPoly sym(std::initializer_list<NCPoly> args) {
  return sym(std::span<const NCPoly>(args.begin(), args.size()));
}

NCPoly sym(const AlphabetPtr& alphabet, std::span<const NCPoly> args) {
  if (args.empty()) return NCPoly::constant(alphabet, CoeffPoly(1L));
  require_same(alphabet, args[0].alphabet());
  return sym(args);
}

NCPoly diamond(const NCPoly& a, const NCPoly& b) { return sym({a, b}); }

CPoly abelianize(const NCPoly& p) {
  CPoly out(p.alphabet());
  Exponents e(p.alphabet()->size());
  for (const auto& [w, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (Letter g : w) ++e[g];
    out.add_term(e, c);
  }
  return out;
}

}  // namespace symq
