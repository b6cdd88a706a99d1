// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Usage: symq_acceptance [criterion...]

#include <chrono>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support.hpp"
#include "symq/cli.hpp"
#include "symq/freealg.hpp"
#include "symq/identities.hpp"
#include "symq/poisson.hpp"
#include "symq/random.hpp"
#include "symq/symmetrization.hpp"
#include "symq/expr.hpp"

using namespace symq;

namespace {

// Every comparison below is exact rational equality; the only numeric
// limits are wall-clock budgets in seconds.
constexpr double kBernoulliBudget = 1.0;
constexpr double kLemma1Budget = 30.0;
constexpr double kPcBudget = 60.0;
constexpr double kWickBudget = 60.0;
constexpr double kMoyalBudget = 60.0;
constexpr double kQuantizeBudget = 5.0;

constexpr std::size_t kWickTrials = 20;
constexpr std::size_t kTranspositionTrials = 50;
constexpr std::size_t kMoyalTrials = 50;
constexpr std::size_t kCorrespondenceTrials = 100;
constexpr std::size_t kGeneralTrials = 50;
constexpr std::size_t kStructuralTrials = 100;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void within(Outcome& o, Clock::time_point t0, double budget,
            const std::string& what) {
  double s = seconds_since(t0);
  std::ostringstream msg;
  msg << what << " took " << s << " s, budget " << budget << " s";
  o.require(s < budget, msg.str());
}

nlohmann::json cli_json(std::vector<std::string> args, int& code) {
  args.push_back("--json");
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  if (out.str().empty()) return nlohmann::json::object();
  return nlohmann::json::parse(out.str());
}

CoeffPoly q(long n, long d = 1) { return CoeffPoly(Scalar(n, d)); }

Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  int code = 0;
  auto j = cli_json({"verify", "bernoulli", "--hmax", "5"}, code);
  within(o, t0, kBernoulliBudget, "verify bernoulli");
  o.require(code == 0, "exit code " + std::to_string(code));
  const std::vector<std::string> paper{"1/12", "-1/720", "1/30240", "-1/1209600",
                                       "1/47900160"};
  o.require(j["results"].size() == paper.size(), "wrong number of coefficients");
  for (std::size_t h = 0; h < paper.size() && h < j["results"].size(); ++h) {
    std::string got = j["results"][h]["c_h"];
    o.require(got == paper[h], "c_" + std::to_string(h + 1) + " = " + got);
  }
  return o;
}

Outcome verify_cli(const std::string& name, unsigned k) {
  Outcome o;
  int code = 0;
  auto j = cli_json({"verify", name, "--k", std::to_string(k)}, code);
  o.require(code == 0 && j["results"][0]["holds"] == true,
            name + " fails at k = " + std::to_string(k));
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (unsigned k = 2; k <= 5; ++k) {
    auto t0 = Clock::now();
    auto r = verify_cli("lemma1", k);
    o.require(r.pass, r.detail);
    if (k == 5) within(o, t0, kLemma1Budget, "lemma1 at k = 5");
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (unsigned k = 1; k <= 5; ++k) {
    auto r = verify_cli("pc1", k);
    o.require(r.pass, r.detail);
  }
  for (unsigned k = 2; k <= 4; ++k) {
    auto t0 = Clock::now();
    auto r = verify_cli("pc2", k);
    o.require(r.pass, r.detail);
    if (k == 4) within(o, t0, kPcBudget, "pc2 at k = 4");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto r = verify_distr();
  o.require(r.holds, "residual " + to_string(r.residual));
  return o;
}

struct Display {
  AlphabetPtr a;
  std::vector<NCPoly> ls, ms;
  PairingMatrix d;
};

// L1, L2, M1, M2, M3 with symbolic pairings d11..d23.
Display display_setup() {
  Display s;
  s.a = make_alphabet({"L1", "L2", "M1", "M2", "M3"},
                      {"d11", "d12", "d13", "d21", "d22", "d23"});
  for (Letter g = 0; g < 5; ++g) {
    (g < 2 ? s.ls : s.ms).push_back(NCPoly::generator(s.a, g));
  }
  s.d.assign(2, std::vector<CoeffPoly>(3));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) s.d[i][j] = CoeffPoly::param(3 * i + j);
  }
  return s;
}

Outcome criterion5() {
  Outcome o;
  auto t0 = Clock::now();
  for (std::size_t l = 1; l <= 4; ++l) {
    for (std::size_t m = 1; m <= 4; ++m) {
      auto r = verify_wick(l, m, kWickTrials, 1000 + 10 * l + m);
      o.require(r.holds(), r.identity + ": " + r.first_failure);
    }
  }
  auto s = display_setup();
  auto D = [&](int i, int j) { return s.d[i - 1][j - 1]; };
  const NCPoly &L1 = s.ls[0], &L2 = s.ls[1];
  const NCPoly &M1 = s.ms[0], &M2 = s.ms[1], &M3 = s.ms[2];
  NCPoly expect = sym({L1, L2, M1, M2, M3});
  NCPoly half(s.a);
  half.add_scaled(sym({L2, M2, M3}), D(1, 1));
  half.add_scaled(sym({L2, M1, M3}), D(1, 2));
  half.add_scaled(sym({L2, M1, M2}), D(1, 3));
  half.add_scaled(sym({L1, M2, M3}), D(2, 1));
  half.add_scaled(sym({L1, M1, M3}), D(2, 2));
  half.add_scaled(sym({L1, M1, M2}), D(2, 3));
  expect.add_scaled(half, q(1, 2));
  NCPoly quarter(s.a);
  quarter.add_scaled(M3, D(1, 1) * D(2, 2) + D(1, 2) * D(2, 1));
  quarter.add_scaled(M2, D(1, 1) * D(2, 3) + D(1, 3) * D(2, 1));
  quarter.add_scaled(M1, D(1, 2) * D(2, 3) + D(1, 3) * D(2, 2));
  expect.add_scaled(quarter, q(1, 4));
  o.require(wick_product(s.ls, s.ms, s.d) == expect,
            "l = 2, m = 3 display not reproduced");
  within(o, t0, kWickBudget, "wick sweep");
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto s = display_setup();
  const NCPoly &L1 = s.ls[0], &L2 = s.ls[1];
  const NCPoly &M1 = s.ms[0], &M2 = s.ms[1], &M3 = s.ms[2];
  NCPoly expect = M1 * L1 * M2 * L2 * M3;
  expect.add_scaled(M2 * L2 * M3, s.d[0][0]);
  expect.add_scaled(L1 * M2 * M3, s.d[1][0]);
  expect.add_scaled(M1 * L1 * M3, s.d[1][1]);
  expect.add_scaled(M3, s.d[0][0] * s.d[1][1]);
  o.require(transposition_expand(s.ls, s.ms, s.d, {3, 1, 4, 2, 5}) == expect,
            "sigma = (31425) display not reproduced");
  Rng sizes(6);
  for (std::size_t t = 0; t < kTranspositionTrials; ++t) {
    auto l = static_cast<std::size_t>(sizes.uniform(1, 4));
    auto m = static_cast<std::size_t>(sizes.uniform(1, 4));
    auto r = verify_transposition(l, m, 1, 6000 + t);
    o.require(r.holds(), r.identity + ": " + r.first_failure);
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto t0 = Clock::now();
  for (std::size_t n = 1; n <= 2; ++n) {
    auto r = verify_moyal(n, 4, kMoyalTrials, 7000 + n);
    o.require(r.holds(), r.identity + ": " + r.first_failure);
  }
  within(o, t0, kMoyalBudget, "moyal sweep");
  return o;
}

Outcome criterion8() {
  Outcome o;
  Rng rng(8);
  struct Case {
    RelationSystem rel;
    bool affine;
  };
  std::vector<Case> cases{{canonical_system(2), false},
                          {so3_system(), true},
                          {heisenberg_system(), true}};
  for (auto& c : cases) {
    Rewriter rw(c.rel);
    auto a = c.rel.b_alphabet();
    std::size_t failures = 0;
    for (std::size_t t = 0; t < kCorrespondenceTrials; ++t) {
      CPoly h = c.affine ? random_affine(a, rng)
                         : random_cpoly(a, rng, {.max_degree = 2, .max_terms = 4});
      CPoly f = random_cpoly(a, rng, {.max_degree = c.affine ? 4U : 5U,
                                      .max_terms = 3});
      if (!bracket_correspondence(h, f, rw).equal) ++failures;
    }
    o.require(failures == 0, c.rel.name() + ": " + std::to_string(failures) +
                                 " unequal instances");
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  int code = 0;
  auto j = cli_json({"counterexample", "--case", "constant"}, code);
  o.require(code == 0, "exit code " + std::to_string(code));
  std::string got = j["results"][0]["discrepancy"];
  o.require(j["results"][0]["equal"] == false, "no discrepancy found");
  o.require(got == "-3/2", "discrepancy is " + got + ", expected -3/2");
  return o;
}

Outcome criterion10() {
  Outcome o;
  RelationSpec spec;
  spec.name = "quadratic";
  spec.bracket_case = BracketCase::General;
  spec.generators = {"B1", "B2"};
  spec.extended_generators = {"T3"};  // stands for a quadratic function of B
  spec.brackets = {{0, 1, {{Letter{2}, q(1)}, {Letter{0}, q(-1, 2)}}}};
  RelationSystem rel(spec);
  Rng rng(10);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < kGeneralTrials; ++t) {
    CPoly h = random_affine(rel.b_alphabet(), rng);
    CPoly f = random_cpoly(rel.b_alphabet(), rng, {.max_degree = 4, .max_terms = 3});
    if (!bracket_correspondence(h, f, rel).equal) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " unequal instances");
  return o;
}

Outcome criterion11() {
  Outcome o;
  auto t0 = Clock::now();
  auto c2 = canonical_system(2);
  auto a = c2.b_alphabet();
  auto rep = quantize_check(c2, {parse_expr("(1/2)*(p1^2+p2^2+x1^2+x2^2)", a)},
                            {parse_expr("x1*p2 - x2*p1", a)});
  o.require(rep.all_leibniz_zero, "a Leibniz bracket is nonzero");
  o.require(rep.all_commutators_zero, "a commutator is nonzero");
  o.require(!rep.any_defect, "defect reported");
  within(o, t0, kQuantizeBudget, "oscillator quantize_check");

  auto t1 = Clock::now();
  auto so3 = so3_system();
  auto cas = casimir_quantization(parse_expr("L1^2+L2^2+L3^2", so3.b_alphabet()), so3);
  o.require(cas.is_casimir && cas.commutes_with_all, "Casimir check negative");
  within(o, t1, kQuantizeBudget, "so(3) casimir_quantization");
  return o;
}

Outcome criterion12() {
  Outcome o;
  Rng rng(12);
  auto free3 = make_alphabet({"u", "v", "w"});
  std::size_t bad_abel = 0, bad_perm = 0;
  for (std::size_t t = 0; t < kStructuralTrials; ++t) {
    CPoly p = random_cpoly(free3, rng, {.max_degree = 5, .max_terms = 4});
    if (!(abelianize(symmetrize(p)) == p)) ++bad_abel;
    std::vector<NCPoly> args;
    auto k = rng.uniform(2, 4);
    for (std::int64_t i = 0; i < k; ++i) {
      args.push_back(random_ncpoly(free3, rng, {.max_degree = 2, .max_terms = 2}));
    }
    NCPoly base = sym(args);
    std::vector<NCPoly> rotated(args.begin() + 1, args.end());
    rotated.push_back(args.front());
    if (!(sym(rotated) == base && base == symq::test::brute_sym(args))) ++bad_perm;
  }
  o.require(bad_abel == 0, "abelianize o symmetrize != id");
  o.require(bad_perm == 0, "sym not permutation invariant");

  std::size_t bad_nf = 0, bad_leibniz = 0, bad_jacobi = 0;
  std::vector<RelationSystem> systems{canonical_system(2), so3_system(),
                                      heisenberg_system()};
  for (std::size_t t = 0; t < kStructuralTrials; ++t) {
    const auto& rel = systems[t % systems.size()];
    Rewriter rw(rel);
    auto a = rel.b_alphabet();
    NCPoly u = random_ncpoly(a, rng, {.max_degree = 4, .max_terms = 3});
    NCPoly v = random_ncpoly(a, rng, {.max_degree = 4, .max_terms = 3});
    NCPoly nu = rw.normal_form(u);
    if (!(rw.normal_form(nu) == nu &&
          rw.normal_form(u * v) == rw.normal_form(nu * rw.normal_form(v)) &&
          rw.normal_form(u + v) == nu + rw.normal_form(v))) {
      ++bad_nf;
    }
    CPoly h = random_cpoly(a, rng, {.max_degree = 3, .max_terms = 3});
    CPoly f = random_cpoly(a, rng, {.max_degree = 3, .max_terms = 3});
    CPoly g = random_cpoly(a, rng, {.max_degree = 3, .max_terms = 3});
    if (!(leibniz_bracket(h, f * g, rel) ==
          leibniz_bracket(h, f, rel) * g + f * leibniz_bracket(h, g, rel))) {
      ++bad_leibniz;
    }
    CPoly jac = leibniz_bracket(h, leibniz_bracket(f, g, rel), rel) +
                leibniz_bracket(f, leibniz_bracket(g, h, rel), rel) +
                leibniz_bracket(g, leibniz_bracket(h, f, rel), rel);
    if (!jac.is_zero()) ++bad_jacobi;
  }
  o.require(bad_nf == 0, "normal form not an idempotent quotient map");
  o.require(bad_leibniz == 0, "Leibniz rule fails");
  o.require(bad_jacobi == 0, "Jacobi identity fails");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all{
      {1, "Bernoulli coefficients c_1..c_5", criterion1},
      {2, "Lemma 1 for k = 2..5", criterion2},
      {3, "pc1 for k = 1..5, pc2 for k = 2..4", criterion3},
      {4, "distributivity of nested diamonds", criterion4},
      {5, "Wick product and commutator, l, m <= 4", criterion5},
      {6, "transposition expansion", criterion6},
      {7, "Moyal bracket, n <= 2", criterion7},
      {8, "correspondence, constant and linear cases", criterion8},
      {9, "counterexample (p^3, x^3) discrepancy", criterion9},
      {10, "correspondence, general case", criterion10},
      {11, "oscillator set and so(3) Casimir", criterion11},
      {12, "structural invariants", criterion12},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = seconds_since(t0);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": "
              << c.title << " (" << std::fixed << std::setprecision(2) << s
              << " s)";
    if (!o.pass) std::cout << " -- " << o.detail;
    std::cout << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria pass"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
