#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symq/alphabet.hpp"
#include "symq/c_poly.hpp"
#include "symq/nc_poly.hpp"

namespace symq {

enum class BracketCase { Constant, Linear, General };

const char* to_string(BracketCase c);
BracketCase parse_bracket_case(const std::string& text);

// One summand of a bracket value: coeff * T_target, or a bare coefficient
// when target is empty (constant case).
struct BracketTerm {
  std::optional<Letter> target;
  CoeffPoly coeff;
};

// {B_i, B_j} for one unordered pair; the reverse pair is implied by
// antisymmetry. Indices refer to the generator list B.
struct BracketSpec {
  Letter i = 0;
  Letter j = 0;
  std::vector<BracketTerm> terms;
};

struct RelationSpec {
  std::string name;
  BracketCase bracket_case = BracketCase::Constant;
  std::vector<std::string> generators;           // B, length l
  std::vector<std::string> extended_generators;  // T \ B, general case only
  std::vector<std::string> central_params;       // D
  std::vector<BracketSpec> brackets;             // unlisted pairs are zero
  Limits limits;
};

// Resolved value of {B_a, B_b}: constant part plus a combination of T
// generators with increasing letter index.
struct BracketValue {
  CoeffPoly constant;
  std::vector<std::pair<Letter, CoeffPoly>> linear;

  bool is_zero() const { return constant.is_zero() && linear.empty(); }
  CoeffPoly coefficient_of(Letter t) const;
};

struct JacobiViolation {
  Letter i, j, h, m;
  CoeffPoly value;
};

struct ValidationReport {
  bool valid = true;
  std::vector<JacobiViolation> violations;
};

// Immutable once constructed; cheap to copy (shared state).
class RelationSystem {
 public:
  // Throws AlgebraError(MalformedInput) on bad indices, duplicate pairs or
  // terms that do not fit the bracket case.
  explicit RelationSystem(RelationSpec spec);

  const std::string& name() const { return data_->spec.name; }
  BracketCase bracket_case() const { return data_->spec.bracket_case; }
  const RelationSpec& spec() const { return data_->spec; }

  // Alphabet of B (l generators) and of T = B followed by the extended
  // generators. Both pointers are the same object unless the case is
  // General with a non-empty extension.
  const AlphabetPtr& b_alphabet() const { return data_->b_alphabet; }
  const AlphabetPtr& t_alphabet() const { return data_->t_alphabet; }
  std::size_t l() const { return data_->b_alphabet->size(); }
  std::size_t m() const { return data_->t_alphabet->size(); }

  // {B_a, B_b} for a, b < l.
  const BracketValue& bracket(Letter a, Letter b) const;
  // The same value as an element over T (free or commutative).
  NCPoly bracket_nc(Letter a, Letter b) const;
  CPoly bracket_c(Letter a, Letter b) const;

  const ValidationReport& validation() const { return data_->report; }

 private:
  struct Data {
    RelationSpec spec;
    AlphabetPtr b_alphabet;
    AlphabetPtr t_alphabet;
    std::vector<BracketValue> table;  // l * l, row-major
    ValidationReport report;
  };
  std::shared_ptr<const Data> data_;
};

// Index checks happen at construction; this evaluates the Jacobi sums
//   sum_k (c_ij^k c_kh^m + c_hi^k c_kj^m + c_jh^k c_ki^m)
// for every quadruple (linear case only) and lists each nonzero one.
ValidationReport validate_relations(const RelationSystem& rel);

// Generators (x_1..x_n, p_1..p_n), {p_i, x_j} = delta_ij. For n = 1 the
// names are plain "x" and "p".
RelationSystem canonical_system(std::size_t n);
// {L1,L2} = L3, {L2,L3} = L1, {L3,L1} = L2.
RelationSystem so3_system();
// 2-step nilpotent: {X,Y} = Z, Z central.
RelationSystem heisenberg_system();

// sum_r w_<r [B_i, w_r] w_>r with each generator bracket replaced by its
// relation value; the result lives over T. In the general case every
// letter of w must lie in B, otherwise UnknownBracket is thrown.
NCPoly substituting_commutator(Letter i, const Word& w,
                               const RelationSystem& rel);
// Linear extension over the words of p (p over T).
NCPoly substituting_commutator(Letter i, const NCPoly& p,
                               const RelationSystem& rel);

// PBW normal forms modulo the relations: every word is rewritten to
// nondecreasing generator order with B_j B_i -> B_i B_j + [B_j, B_i].
// Words are reduced together so equal intermediate words merge before they
// are rewritten further; each distinct word is expanded once per call.
class Rewriter {
 public:
  // Throws UnsupportedCase for general systems and InvalidRelations for
  // linear systems that fail the Jacobi check.
  explicit Rewriter(RelationSystem rel);

  NCPoly normal_form(const NCPoly& p);
  // NF(a * b), computed as NF(NF(a) * NF(b)).
  NCPoly product(const NCPoly& a, const NCPoly& b);
  NCPoly commutator(const NCPoly& a, const NCPoly& b);

  const RelationSystem& relations() const { return rel_; }

 private:
  RelationSystem rel_;
};

NCPoly normal_form(const NCPoly& p, const RelationSystem& rel);
bool equal_mod_relations(const NCPoly& a, const NCPoly& b,
                         const RelationSystem& rel);

}  // namespace symq
