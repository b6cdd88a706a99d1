#include "symq/symmetrization.hpp"

#include <algorithm>
#include <sstream>

#include "symq/errors.hpp"
#include "symq/freealg.hpp"
#include "symq/poisson.hpp"
#include "symq/random.hpp"

namespace symq {

NCPoly symmetrize(const CPoly& p) {
  const AlphabetPtr& alphabet = p.alphabet();
  NCPoly out(alphabet);
  std::vector<NCPoly> letters;
  for (const auto& [e, c] : p.terms()) {
    letters.clear();
    for (std::size_t g = 0; g < e.size(); ++g) {
      for (unsigned k = 0; k < e[g]; ++k) {
        letters.push_back(NCPoly::generator(alphabet, static_cast<Letter>(g)));
      }
    }
    if (letters.empty()) {
      out.add_term(Word{}, c);
    } else {
      out.add_scaled(sym(letters), c);
    }
  }
  return out;
}

namespace {

// Coefficients of an affine H = sum b_j B_j + c; throws if deg H > 1.
std::vector<CoeffPoly> affine_coefficients(const CPoly& h) {
  if (h.degree() > 1) {
    throw AlgebraError(ErrorKind::BadArgument,
                       "general-case correspondence requires H affine in B");
  }
  std::vector<CoeffPoly> b(h.alphabet()->size());
  for (const auto& [e, c] : h.terms()) {
    for (std::size_t g = 0; g < e.size(); ++g) {
      if (e[g] == 1) b[g] = c;
    }
  }
  return b;
}

// [H, X] for affine H over the general system, one substitution level.
NCPoly affine_commutator(const std::vector<CoeffPoly>& b, const NCPoly& x,
                         const RelationSystem& rel) {
  NCPoly out(rel.t_alphabet());
  for (std::size_t g = 0; g < b.size(); ++g) {
    if (b[g].is_zero()) continue;
    out.add_scaled(substituting_commutator(static_cast<Letter>(g), x, rel),
                   b[g]);
  }
  return out;
}

NCPoly symmetrize_over_t(const CPoly& f, const RelationSystem& rel) {
  return symmetrize(embed(f, rel.t_alphabet()));
}

CorrespondenceResult general_correspondence(const CPoly& h, const CPoly& f,
                                            const RelationSystem& rel) {
  require_same(h.alphabet(), rel.b_alphabet());
  require_same(f.alphabet(), rel.b_alphabet());
  auto b = affine_coefficients(h);
  NCPoly lhs = affine_commutator(b, symmetrize_over_t(f, rel), rel);
  NCPoly rhs = symmetrize(leibniz_bracket(h, f, rel));
  NCPoly diff = lhs - rhs;
  bool equal = diff.is_zero();
  return {std::move(lhs), std::move(rhs), equal, std::move(diff)};
}

}  // namespace

CorrespondenceResult bracket_correspondence(const CPoly& h, const CPoly& f,
                                            Rewriter& rewriter) {
  const RelationSystem& rel = rewriter.relations();
  NCPoly hs = symmetrize(h);
  NCPoly fs = symmetrize(f);
  NCPoly lhs = commutator(hs, fs);
  NCPoly rhs = symmetrize(leibniz_bracket(h, f, rel));
  NCPoly discrepancy = rewriter.normal_form(lhs - rhs);
  bool equal = discrepancy.is_zero();
  return {std::move(lhs), std::move(rhs), equal, std::move(discrepancy)};
}

CorrespondenceResult bracket_correspondence(const CPoly& h, const CPoly& f,
                                            const RelationSystem& rel) {
  if (rel.bracket_case() == BracketCase::General) {
    return general_correspondence(h, f, rel);
  }
  Rewriter rewriter(rel);
  return bracket_correspondence(h, f, rewriter);
}

QuantizationReport quantize_check(const RelationSystem& rel,
                                  const std::vector<CPoly>& centrals,
                                  const std::vector<CPoly>& others,
                                  QuantizeOptions options) {
  QuantizationReport report;
  report.bracket_case = rel.bracket_case();
  report.r = centrals.size();
  report.s = centrals.size() + others.size();
  if (centrals.empty()) {
    throw AlgebraError(ErrorKind::MalformedInput,
                       "quantize_check needs at least one central polynomial");
  }

  std::vector<const CPoly*> all;
  for (const auto& p : centrals) all.push_back(&p);
  for (const auto& p : others) all.push_back(&p);
  for (const CPoly* p : all) {
    require_same(p->alphabet(), rel.b_alphabet());
    report.degrees.push_back(p->degree());
  }

  const bool general = rel.bracket_case() == BracketCase::General;
  const unsigned bound = rel.bracket_case() == BracketCase::Constant ? 2 : 1;
  auto within = [&](std::size_t k) { return report.degrees[k] <= bound; };
  auto& cond = report.conditions;
  cond.bound = bound;
  cond.a = cond.b = cond.b_literal = true;
  for (std::size_t k = 0; k < report.s; ++k) {
    if (k < report.r) cond.a = cond.a && within(k);
    if (k >= report.r) cond.b = cond.b && within(k);
    if (k >= 1) cond.b_literal = cond.b_literal && within(k);
  }

  if (general) {
    for (std::size_t i = 0; i < report.r; ++i) {
      if (!within(i)) {
        throw AlgebraError(ErrorKind::BadArgument,
                           "general case: central polynomial " +
                               std::to_string(i + 1) + " is not affine in B");
      }
    }
  }

  std::vector<NCPoly> syms;
  for (const CPoly* p : all) {
    syms.push_back(general ? symmetrize_over_t(*p, rel) : symmetrize(*p));
  }
  std::optional<Rewriter> rewriter;
  if (!general) rewriter.emplace(rel);

  for (std::size_t i = 0; i < report.r; ++i) {
    for (std::size_t j = 0; j < report.s; ++j) {
      PairResult pr{i, j, leibniz_bracket(*all[i], *all[j], rel), false, false,
                    false, false, NCPoly(rel.t_alphabet())};
      pr.leibniz_zero = pr.leibniz.is_zero();
      if (general) {
        pr.discrepancy =
            affine_commutator(affine_coefficients(*all[i]), syms[j], rel);
      } else {
        pr.discrepancy = rewriter->commutator(syms[i], syms[j]);
      }
      pr.commutator_zero = pr.discrepancy.is_zero();
      pr.theorem_applies = i == j || within(i) || within(j);
      pr.defect = pr.theorem_applies && pr.leibniz_zero && !pr.commutator_zero;
      report.all_leibniz_zero = report.all_leibniz_zero && pr.leibniz_zero;
      report.all_commutators_zero =
          report.all_commutators_zero && pr.commutator_zero;
      report.any_defect = report.any_defect || pr.defect;
      report.pairs.push_back(std::move(pr));
    }
  }

  const char* bracket_text = options.assume_poly_independent
                                 ? "{P_i, P_j} = 0 on M"
                                 : "{P_i, P_j}_N = 0";
  std::ostringstream verdict;
  if (report.any_defect) {
    verdict << "DEFECT: a pair with vanishing Leibniz bracket and a degree "
               "condition satisfied has a nonzero commutator";
  } else if (report.all_commutators_zero) {
    verdict << "all " << report.pairs.size()
            << " commutators [F_i, F_j] vanish (i central)";
    if (report.all_leibniz_zero) verdict << "; " << bracket_text << " for all pairs";
  } else if (!report.all_leibniz_zero) {
    verdict << "hypothesis " << bracket_text
            << " fails for some pairs; no vanishing claim is made for them";
  } else {
    verdict << "some commutators do not vanish outside the degree conditions";
  }
  report.verdict = verdict.str();

  std::ostringstream claim;
  if (report.all_commutators_zero) {
    claim << "If the operators F are quasi-independent (not checked here), "
             "the set is quasi-integrable with "
          << report.r << " central integrals.";
  } else {
    claim << "No quasi-integrability claim: not all commutators vanish.";
  }
  report.claim = claim.str();
  return report;
}

CasimirResult casimir_quantization(const CPoly& c, const RelationSystem& rel,
                                   std::uint64_t seed, std::size_t trials) {
  if (rel.bracket_case() != BracketCase::Linear) {
    throw AlgebraError(ErrorKind::UnsupportedCase,
                       "Casimir quantization is defined for linear systems");
  }
  require_same(c.alphabet(), rel.b_alphabet());
  CasimirResult result;
  const AlphabetPtr& b = rel.b_alphabet();
  for (std::size_t g = 0; g < rel.l(); ++g) {
    auto gen = CPoly::generator(b, static_cast<Letter>(g));
    CPoly br = leibniz_bracket(c, gen, rel);
    if (!br.is_zero()) {
      result.witnesses.push_back({"{C, " + b->name(static_cast<Letter>(g)) + "}_N",
                                  to_string(br)});
    }
  }
  result.is_casimir = result.witnesses.empty();

  Rewriter rewriter(rel);
  NCPoly csym = symmetrize(c);
  result.commutes_with_all = true;
  for (std::size_t g = 0; g < rel.l(); ++g) {
    NCPoly comm = rewriter.commutator(
        csym, NCPoly::generator(b, static_cast<Letter>(g)));
    if (!comm.is_zero()) {
      result.commutes_with_all = false;
      result.witnesses.push_back(
          {"[C^sym, " + b->name(static_cast<Letter>(g)) + "]", to_string(comm)});
    }
  }
  if (result.commutes_with_all) {
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      NCPoly p = random_ncpoly(b, rng, {.max_degree = 3, .max_terms = 3});
      NCPoly comm = rewriter.commutator(csym, p);
      ++result.spot_checks;
      if (!comm.is_zero()) {
        result.commutes_with_all = false;
        result.witnesses.push_back({"[C^sym, " + to_string(p) + "]",
                                    to_string(comm)});
      }
    }
  }
  return result;
}

}  // namespace symq
