#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symq/c_poly.hpp"
#include "symq/nc_poly.hpp"
#include "symq/relations.hpp"

namespace symq {

// Linear map sending D^a * B_i1 ... B_ik to D^a * sym_k(B_i1, ..., B_ik).
// abelianize(symmetrize(p)) == p.
NCPoly symmetrize(const CPoly& p);

struct CorrespondenceResult {
  NCPoly lhs;          // [H^sym, F^sym]
  NCPoly rhs;          // ({H, F}_N)^sym
  bool equal = false;
  NCPoly discrepancy;  // normal form of lhs - rhs
};

// Compares the commutator of the symmetrized polynomials with the
// symmetrized Leibniz bracket.
//  - constant / linear: lhs is the free-algebra commutator over B and
//    equality is decided modulo the relations by normal forms;
//  - general: H must be affine (AlgebraError(BadArgument) otherwise), lhs
//    is the one-level substituting commutator over T and equality is exact
//    in the free algebra on T.
CorrespondenceResult bracket_correspondence(const CPoly& h, const CPoly& f,
                                            const RelationSystem& rel);
// Same, reusing a caller-owned rewriter (constant / linear only).
CorrespondenceResult bracket_correspondence(const CPoly& h, const CPoly& f,
                                            Rewriter& rewriter);

struct PairResult {
  std::size_t i = 0;  // index into centrals
  std::size_t j = 0;  // index into centrals ++ others
  CPoly leibniz;
  bool leibniz_zero = false;
  bool commutator_zero = false;
  // Some member of the pair has degree within the bound (or i == j), so
  // leibniz_zero must imply commutator_zero.
  bool theorem_applies = false;
  bool defect = false;
  NCPoly discrepancy;  // [F_i, F_j] in normal form (general: over T)
};

struct DegreeConditions {
  unsigned bound = 0;    // 2 for constant, 1 otherwise
  bool a = false;        // every central within the bound
  bool b = false;        // every non-central within the bound
  bool b_literal = false;  // every P_j with j = 2..s within the bound
};

struct QuantizationReport {
  BracketCase bracket_case = BracketCase::Constant;
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<unsigned> degrees;
  DegreeConditions conditions;
  std::vector<PairResult> pairs;
  bool all_leibniz_zero = true;
  bool all_commutators_zero = true;
  bool any_defect = false;
  std::string verdict;
  std::string claim;
};

struct QuantizeOptions {
  bool assume_poly_independent = false;
};

// Checks every pair (i in centrals, j in centrals ++ others). In the general
// case the centrals must be affine in B.
QuantizationReport quantize_check(const RelationSystem& rel,
                                  const std::vector<CPoly>& centrals,
                                  const std::vector<CPoly>& others,
                                  QuantizeOptions options = {});

struct CasimirWitness {
  std::string what;   // e.g. "{C, L1}_N" or "[C^sym, L1]"
  std::string value;  // rendered nonzero value
};

struct CasimirResult {
  bool is_casimir = false;
  bool commutes_with_all = false;
  std::size_t spot_checks = 0;
  std::vector<CasimirWitness> witnesses;
};

// Runs casimir_check, then verifies [C^sym, B_j] = 0 modulo the relations for
// every generator and, when those vanish, spot-checks [C^sym, P] = 0 for
// `trials` random noncommutative polynomials P.
CasimirResult casimir_quantization(const CPoly& c, const RelationSystem& rel,
                                   std::uint64_t seed = 1,
                                   std::size_t trials = 10);

}  // namespace symq
