#include "symq/relations.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symq/errors.hpp"

namespace symq {

const char* to_string(BracketCase c) {
  switch (c) {
    case BracketCase::Constant: return "constant";
    case BracketCase::Linear: return "linear";
    case BracketCase::General: return "general";
  }
  return "?";
}

BracketCase parse_bracket_case(const std::string& text) {
  if (text == "constant") return BracketCase::Constant;
  if (text == "linear") return BracketCase::Linear;
  if (text == "general") return BracketCase::General;
  throw AlgebraError(ErrorKind::MalformedInput,
                     "unknown bracket case '" + text + "'");
}

CoeffPoly BracketValue::coefficient_of(Letter t) const {
  for (const auto& [g, c] : linear) {
    if (g == t) return c;
  }
  return {};
}

namespace {

void malformed(const std::string& what) {
  throw AlgebraError(ErrorKind::MalformedInput, what);
}

BracketValue negate(const BracketValue& v) {
  BracketValue out;
  out.constant = -v.constant;
  for (const auto& [g, c] : v.linear) out.linear.emplace_back(g, -c);
  return out;
}

}  // namespace

RelationSystem::RelationSystem(RelationSpec spec) {
  auto data = std::make_shared<Data>();
  const std::size_t l = spec.generators.size();
  if (l == 0) malformed("relation system needs at least one generator");
  if (spec.bracket_case != BracketCase::General &&
      !spec.extended_generators.empty()) {
    malformed("extended generators are only allowed in the general case");
  }

  data->b_alphabet =
      make_alphabet(spec.generators, spec.central_params, spec.limits);
  if (spec.extended_generators.empty()) {
    data->t_alphabet = data->b_alphabet;
  } else {
    auto t_names = spec.generators;
    t_names.insert(t_names.end(), spec.extended_generators.begin(),
                   spec.extended_generators.end());
    data->t_alphabet =
        make_alphabet(std::move(t_names), spec.central_params, spec.limits);
  }
  const std::size_t m = data->t_alphabet->size();
  const std::size_t s = spec.central_params.size();

  data->table.assign(l * l, BracketValue{});
  std::set<std::pair<Letter, Letter>> seen;
  for (const auto& b : spec.brackets) {
    if (b.i >= l || b.j >= l) malformed("bracket index outside B");
    if (b.i == b.j) malformed("bracket of a generator with itself");
    auto key = std::minmax(b.i, b.j);
    if (!seen.insert(key).second) {
      malformed("duplicate bracket for pair (" + spec.generators[b.i] + ", " +
                spec.generators[b.j] + ")");
    }
    BracketValue v;
    for (const auto& t : b.terms) {
      if (t.coeff.param_width() > s) {
        malformed("coefficient uses an undeclared central parameter");
      }
      if (!t.target) {
        if (spec.bracket_case != BracketCase::Constant) {
          malformed("constant bracket term in a " +
                    std::string(to_string(spec.bracket_case)) + " system");
        }
        v.constant += t.coeff;
        continue;
      }
      if (spec.bracket_case == BracketCase::Constant) {
        malformed("generator target in a constant system");
      }
      const std::size_t limit =
          spec.bracket_case == BracketCase::Linear ? l : m;
      if (*t.target >= limit) malformed("bracket target out of range");
      auto it = std::find_if(v.linear.begin(), v.linear.end(),
                             [&](const auto& e) { return e.first == *t.target; });
      if (it == v.linear.end()) {
        v.linear.emplace_back(*t.target, t.coeff);
      } else {
        it->second += t.coeff;
      }
    }
    std::erase_if(v.linear, [](const auto& e) { return e.second.is_zero(); });
    std::sort(v.linear.begin(), v.linear.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    data->table[b.i * l + b.j] = v;
    data->table[b.j * l + b.i] = negate(v);
  }
  data->spec = std::move(spec);
  data_ = data;
  data->report = validate_relations(*this);
}

const BracketValue& RelationSystem::bracket(Letter a, Letter b) const {
  const std::size_t l = this->l();
  if (a >= l || b >= l) {
    throw AlgebraError(ErrorKind::UnknownBracket,
                       "bracket requested outside the generator set B");
  }
  return data_->table[a * l + b];
}

NCPoly RelationSystem::bracket_nc(Letter a, Letter b) const {
  const auto& v = bracket(a, b);
  NCPoly out = NCPoly::constant(t_alphabet(), v.constant);
  for (const auto& [g, c] : v.linear) out.add_term(Word{g}, c);
  return out;
}

CPoly RelationSystem::bracket_c(Letter a, Letter b) const {
  const auto& v = bracket(a, b);
  CPoly out = CPoly::constant(t_alphabet(), v.constant);
  for (const auto& [g, c] : v.linear) out += CPoly::generator(t_alphabet(), g) * c;
  return out;
}

ValidationReport validate_relations(const RelationSystem& rel) {
  ValidationReport report;
  if (rel.bracket_case() != BracketCase::Linear) return report;
  const std::size_t l = rel.l();
  auto c = [&](std::size_t a, std::size_t b, std::size_t k) {
    return rel.bracket(static_cast<Letter>(a), static_cast<Letter>(b))
        .coefficient_of(static_cast<Letter>(k));
  };
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      for (std::size_t h = 0; h < l; ++h) {
        for (std::size_t m = 0; m < l; ++m) {
          CoeffPoly sum;
          for (std::size_t k = 0; k < l; ++k) {
            sum += c(i, j, k) * c(k, h, m);
            sum += c(h, i, k) * c(k, j, m);
            sum += c(j, h, k) * c(k, i, m);
          }
          if (!sum.is_zero()) {
            report.valid = false;
            report.violations.push_back(
                {static_cast<Letter>(i), static_cast<Letter>(j),
                 static_cast<Letter>(h), static_cast<Letter>(m), sum});
          }
        }
      }
    }
  }
  return report;
}

RelationSystem canonical_system(std::size_t n) {
  if (n == 0) {
    throw AlgebraError(ErrorKind::BadArgument,
                       "canonical system needs n >= 1");
  }
  RelationSpec spec;
  spec.name = "canonical" + std::to_string(n);
  spec.bracket_case = BracketCase::Constant;
  for (std::size_t i = 1; i <= n; ++i) {
    spec.generators.push_back(n == 1 ? "x" : "x" + std::to_string(i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    spec.generators.push_back(n == 1 ? "p" : "p" + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    spec.brackets.push_back({static_cast<Letter>(n + i), static_cast<Letter>(i),
                             {{std::nullopt, CoeffPoly(1L)}}});
  }
  return RelationSystem(std::move(spec));
}

RelationSystem so3_system() {
  RelationSpec spec;
  spec.name = "so3";
  spec.bracket_case = BracketCase::Linear;
  spec.generators = {"L1", "L2", "L3"};
  spec.brackets = {{0, 1, {{Letter{2}, CoeffPoly(1L)}}},
                   {1, 2, {{Letter{0}, CoeffPoly(1L)}}},
                   {2, 0, {{Letter{1}, CoeffPoly(1L)}}}};
  return RelationSystem(std::move(spec));
}

RelationSystem heisenberg_system() {
  RelationSpec spec;
  spec.name = "heisenberg";
  spec.bracket_case = BracketCase::Linear;
  spec.generators = {"X", "Y", "Z"};
  spec.brackets = {{0, 1, {{Letter{2}, CoeffPoly(1L)}}}};
  return RelationSystem(std::move(spec));
}

NCPoly substituting_commutator(Letter i, const Word& w,
                               const RelationSystem& rel) {
  NCPoly out(rel.t_alphabet());
  if (i >= rel.l()) {
    throw AlgebraError(ErrorKind::UnknownBracket,
                       "left operand of the substituting commutator is not in B");
  }
  for (Letter g : w) {
    if (g >= rel.m()) {
      throw AlgebraError(ErrorKind::BadArgument, "letter outside T");
    }
    if (g >= rel.l()) {
      throw AlgebraError(
          ErrorKind::UnknownBracket,
          "bracket [" + rel.t_alphabet()->name(i) + ", " +
              rel.t_alphabet()->name(g) + "] is not determined by the relations");
    }
  }
  Word scratch;
  for (std::size_t r = 0; r < w.size(); ++r) {
    const auto& v = rel.bracket(i, w[r]);
    if (v.is_zero()) continue;
    if (!v.constant.is_zero()) {
      scratch.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
      scratch.insert(scratch.end(), w.begin() + static_cast<std::ptrdiff_t>(r) + 1,
                     w.end());
      out.add_term(scratch, v.constant);
    }
    for (const auto& [g, c] : v.linear) {
      scratch = w;
      scratch[r] = g;
      out.add_term(scratch, c);
    }
  }
  return out;
}

NCPoly substituting_commutator(Letter i, const NCPoly& p,
                               const RelationSystem& rel) {
  require_same(p.alphabet(), rel.t_alphabet());
  NCPoly out(rel.t_alphabet());
  for (const auto& [w, c] : p.terms()) {
    out.add_scaled(substituting_commutator(i, w, rel), c);
  }
  return out;
}

Rewriter::Rewriter(RelationSystem rel) : rel_(std::move(rel)) {
  if (rel_.bracket_case() == BracketCase::General) {
    throw AlgebraError(ErrorKind::UnsupportedCase,
                       "normal forms are not defined for general-case systems");
  }
  if (!rel_.validation().valid) {
    throw AlgebraError(ErrorKind::InvalidRelations,
                       "relation system '" + rel_.name() +
                           "' violates the Jacobi identity; rewriting would "
                           "not be confluent");
  }
}

namespace {

std::size_t inversions(const Word& w) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) n += w[i] > w[j];
  }
  return n;
}

// Pending words, longest first and then most inversions first. A rewrite
// either removes one inversion or shortens the word, so every word is popped
// after all words that can still produce it.
struct Pending {
  std::size_t length;
  std::size_t inv;
  Word word;
  bool operator<(const Pending& o) const {
    if (length != o.length) return length > o.length;
    if (inv != o.inv) return inv > o.inv;
    return word < o.word;
  }
};

}  // namespace

NCPoly Rewriter::normal_form(const NCPoly& p) {
  require_same(p.alphabet(), rel_.b_alphabet());
  std::map<Pending, CoeffPoly> work;
  auto push = [&work](Word w, std::size_t inv, const CoeffPoly& c) {
    Pending key{w.size(), inv, std::move(w)};
    auto [it, fresh] = work.try_emplace(std::move(key), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  for (const auto& [w, c] : p.terms()) push(w, inversions(w), c);

  NCPoly out(rel_.b_alphabet());
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& w = node.key().word;
    const CoeffPoly& c = node.mapped();
    std::size_t r = 0;
    while (r + 1 < w.size() && w[r] <= w[r + 1]) ++r;
    if (r + 1 >= w.size()) {
      out.add_term(w, c);
      continue;
    }
    // B_j B_i = B_i B_j + [B_j, B_i] at the leftmost inversion.
    Word swapped = w;
    std::swap(swapped[r], swapped[r + 1]);
    push(std::move(swapped), node.key().inv - 1, c);
    const auto& v = rel_.bracket(w[r], w[r + 1]);
    const auto before = w.begin() + static_cast<std::ptrdiff_t>(r);
    const auto after = before + 2;
    if (!v.constant.is_zero()) {
      Word shorter(w.begin(), before);
      shorter.insert(shorter.end(), after, w.end());
      std::size_t inv = inversions(shorter);
      push(std::move(shorter), inv, c * v.constant);
    }
    for (const auto& [g, k] : v.linear) {
      Word replaced(w.begin(), before);
      replaced.push_back(g);
      replaced.insert(replaced.end(), after, w.end());
      std::size_t inv = inversions(replaced);
      push(std::move(replaced), inv, c * k);
    }
  }
  return out;
}

NCPoly Rewriter::product(const NCPoly& a, const NCPoly& b) {
  NCPoly na = normal_form(a);
  NCPoly nb = normal_form(b);
  const std::size_t cap = rel_.b_alphabet()->limits().degree_cap;
  NCPoly joined(rel_.b_alphabet());
  Word w;
  for (const auto& [wa, ca] : na.terms()) {
    for (const auto& [wb, cb] : nb.terms()) {
      if (wa.size() + wb.size() > cap) {
        throw AlgebraError(ErrorKind::DegreeCapExceeded,
                           "product exceeds degree cap");
      }
      w.assign(wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      joined.add_term(w, ca * cb);
    }
  }
  return normal_form(joined);
}

NCPoly Rewriter::commutator(const NCPoly& a, const NCPoly& b) {
  return product(a, b) - product(b, a);
}

NCPoly normal_form(const NCPoly& p, const RelationSystem& rel) {
  return Rewriter(rel).normal_form(p);
}

bool equal_mod_relations(const NCPoly& a, const NCPoly& b,
                         const RelationSystem& rel) {
  return normal_form(a - b, rel).is_zero();
}

}  // namespace symq
