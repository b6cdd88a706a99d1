#include "symq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "symq/algebra_io.hpp"
#include "symq/errors.hpp"
#include "symq/expr.hpp"
#include "symq/freealg.hpp"
#include "symq/identities.hpp"
#include "symq/poisson.hpp"
#include "symq/symmetrization.hpp"

namespace symq::cli {

namespace {

using json = nlohmann::ordered_json;

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::array();
  std::string verdict;
  std::optional<std::uint64_t> seed;
  int exit_code = kOk;

  json to_json() const {
    json j{{"command", command},
           {"inputs", inputs},
           {"results", results},
           {"verdict", verdict}};
    j["seed"] = seed ? json(*seed) : json(nullptr);
    return j;
  }
};

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_text(const Report& r, std::ostream& out) {
  out << r.command << '\n';
  for (const auto& [k, v] : r.inputs.items()) {
    out << "  " << k << ": " << scalar_text(v) << '\n';
  }
  for (const auto& item : r.results) {
    if (!item.is_object()) {
      out << "- " << scalar_text(item) << '\n';
      continue;
    }
    bool first = true;
    for (const auto& [k, v] : item.items()) {
      out << (first ? "- " : "  ") << k << ": ";
      if (v.is_array()) {
        std::string sep;
        for (const auto& e : v) {
          out << sep << scalar_text(e);
          sep = "; ";
        }
      } else {
        out << scalar_text(v);
      }
      out << '\n';
      first = false;
    }
  }
  if (r.seed) out << "seed: " << *r.seed << '\n';
  out << "verdict: " << r.verdict << '\n';
}

struct AlgebraChoice {
  std::string file;
  std::string preset;

  void attach(CLI::App* sub) {
    sub->add_option("-a,--algebra", file, "Algebra definition (JSON)");
    sub->add_option("--preset", preset,
                    "Built-in algebra: canonical:<n>, so3, heisenberg");
  }
  bool given() const { return !file.empty() || !preset.empty(); }
  RelationSystem load() const {
    if (!file.empty() && !preset.empty()) {
      throw AlgebraError(ErrorKind::BadArgument,
                         "give either --algebra or --preset, not both");
    }
    if (!preset.empty()) return preset_algebra(preset);
    if (file.empty()) {
      throw AlgebraError(ErrorKind::BadArgument,
                         "an algebra is required (--algebra or --preset)");
    }
    return load_algebra(file);
  }
  std::string label() const { return preset.empty() ? file : preset; }
};

json verification_json(const VerificationResult& v) {
  return {{"identity", v.identity},
          {"holds", v.holds},
          {"residual", to_string(v.residual)}};
}

json sweep_json(const SweepResult& s) {
  json j{{"identity", s.identity},
         {"instances", s.instances},
         {"failures", s.failures},
         {"holds", s.holds()}};
  if (!s.holds()) j["first_failure"] = s.first_failure;
  return j;
}

void bool_verdict(Report& r, bool ok, const std::string& yes,
                  const std::string& no) {
  r.verdict = ok ? yes : no;
  r.exit_code = ok ? kOk : kNegative;
}

Report cmd_validate(const AlgebraChoice& alg, const std::string& positional) {
  Report r;
  r.command = "validate";
  RelationSystem rel = positional.empty() ? alg.load() : load_algebra(positional);
  r.inputs["algebra"] = positional.empty() ? alg.label() : positional;
  const auto& report = rel.validation();
  const auto& t = *rel.t_alphabet();
  json res{{"name", rel.name()},
           {"case", to_string(rel.bracket_case())},
           {"generators", rel.l()},
           {"valid", report.valid}};
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back("(" + t.name(v.i) + ", " + t.name(v.j) + ", " +
                         t.name(v.h) + ", " + t.name(v.m) +
                         "): " + v.value.to_string(rel.spec().central_params));
  }
  res["jacobi_violations"] = violations;
  r.results.push_back(res);
  bool_verdict(r, report.valid, "valid",
               "invalid: " + std::to_string(report.violations.size()) +
                   " Jacobi violation(s)");
  return r;
}

Report cmd_symmetrize(const AlgebraChoice& alg, const std::string& expr,
                      bool nf) {
  Report r;
  r.command = "symmetrize";
  RelationSystem rel = alg.load();
  r.inputs = {{"algebra", alg.label()}, {"expr", expr}, {"normal_form", nf}};
  CPoly p = parse_expr(expr, rel.b_alphabet());
  NCPoly s = symmetrize(p);
  json res{{"symmetrized", to_string(s)}};
  if (nf) res["normal_form"] = to_string(normal_form(s, rel));
  r.results.push_back(res);
  r.verdict = "ok";
  return r;
}

Report cmd_bracket(const AlgebraChoice& alg, const std::string& h,
                   const std::string& f) {
  Report r;
  r.command = "bracket";
  RelationSystem rel = alg.load();
  r.inputs = {{"algebra", alg.label()}, {"h", h}, {"f", f}};
  CPoly hp = parse_expr(h, rel.b_alphabet());
  CPoly fp = parse_expr(f, rel.b_alphabet());
  CPoly b = leibniz_bracket(hp, fp, rel);
  r.results.push_back({{"leibniz_bracket", to_string(b)}, {"zero", b.is_zero()}});
  r.verdict = b.is_zero() ? "in involution" : "nonzero bracket";
  return r;
}

Report cmd_correspond(const AlgebraChoice& alg, const std::string& h,
                      const std::string& f) {
  Report r;
  r.command = "correspond";
  RelationSystem rel = alg.load();
  r.inputs = {{"algebra", alg.label()}, {"h", h}, {"f", f}};
  CPoly hp = parse_expr(h, rel.b_alphabet());
  CPoly fp = parse_expr(f, rel.b_alphabet());
  auto c = bracket_correspondence(hp, fp, rel);
  r.results.push_back({{"lhs", to_string(c.lhs)},
                       {"rhs", to_string(c.rhs)},
                       {"equal", c.equal},
                       {"discrepancy", to_string(c.discrepancy)}});
  bool_verdict(r, c.equal, "[H^sym, F^sym] = ({H, F}_N)^sym",
               "[H^sym, F^sym] differs from ({H, F}_N)^sym");
  return r;
}

Report cmd_quantize(const AlgebraChoice& alg, const std::string& set_file,
                    bool assume_indep) {
  Report r;
  r.command = "quantize-check";
  json set = read_json_file(set_file);
  RelationSystem rel = alg.given() ? alg.load() : set_algebra(set, set_file);
  r.inputs = {{"algebra", alg.given() ? alg.label() : set.value("algebra", "")},
              {"set", set_file},
              {"assume_poly_independent", assume_indep}};
  IntegrableSet s = parse_set(set, rel);
  auto q = quantize_check(rel, s.centrals, s.others,
                          {.assume_poly_independent = assume_indep});
  std::vector<std::string> sources = s.central_sources;
  sources.insert(sources.end(), s.other_sources.begin(), s.other_sources.end());
  r.results.push_back({{"case", to_string(q.bracket_case)},
                       {"r", q.r},
                       {"s", q.s},
                       {"degrees", q.degrees},
                       {"degree_bound", q.conditions.bound},
                       {"condition_a", q.conditions.a},
                       {"condition_b", q.conditions.b},
                       {"condition_b_literal", q.conditions.b_literal}});
  for (const auto& p : q.pairs) {
    r.results.push_back({{"i", p.i + 1},
                         {"j", p.j + 1},
                         {"f_i", sources[p.i]},
                         {"f_j", sources[p.j]},
                         {"leibniz_bracket", to_string(p.leibniz)},
                         {"leibniz_bracket_zero", p.leibniz_zero},
                         {"commutator_zero", p.commutator_zero},
                         {"theorem_applies", p.theorem_applies},
                         {"defect", p.defect},
                         {"discrepancy", to_string(p.discrepancy)}});
  }
  r.results.push_back({{"claim", q.claim}});
  r.verdict = q.verdict;
  r.exit_code = q.all_commutators_zero && !q.any_defect ? kOk : kNegative;
  return r;
}

Report cmd_casimir(const AlgebraChoice& alg, const std::string& expr,
                   std::size_t trials, std::uint64_t seed) {
  Report r;
  r.command = "casimir";
  RelationSystem rel = alg.load();
  r.inputs = {{"algebra", alg.label()}, {"expr", expr}, {"trials", trials}};
  r.seed = seed;
  CPoly c = parse_expr(expr, rel.b_alphabet());
  auto res = casimir_quantization(c, rel, seed, trials);
  json w = json::array();
  for (const auto& x : res.witnesses) w.push_back(x.what + " = " + x.value);
  r.results.push_back({{"is_casimir", res.is_casimir},
                       {"commutes_with_all", res.commutes_with_all},
                       {"spot_checks", res.spot_checks},
                       {"witnesses", w}});
  bool ok = res.is_casimir && res.commutes_with_all;
  bool_verdict(r, ok, "Casimir; C^sym commutes with every generator",
               res.is_casimir ? "Casimir, but C^sym fails to commute (defect)"
                              : "not a Casimir");
  return r;
}

Report cmd_counterexample(const std::string& which) {
  if (which != "constant") {
    throw AlgebraError(ErrorKind::BadArgument,
                       "only --case constant has a built-in witness");
  }
  Report r;
  r.command = "counterexample";
  RelationSystem rel = canonical_system(1);
  r.inputs = {{"case", which}, {"algebra", "canonical:1"}, {"h", "p^3"},
              {"f", "x^3"}};
  CPoly h = parse_expr("p^3", rel.b_alphabet());
  CPoly f = parse_expr("x^3", rel.b_alphabet());
  auto c = bracket_correspondence(h, f, rel);
  r.results.push_back({{"lhs", to_string(c.lhs)},
                       {"rhs", to_string(c.rhs)},
                       {"equal", c.equal},
                       {"discrepancy", to_string(c.discrepancy)}});
  r.verdict = c.equal ? "no counterexample: correspondence holds"
                      : "correspondence fails for deg H = 3";
  return r;
}

struct VerifyArgs {
  unsigned k = 2;
  std::size_t l = 2;
  std::size_t m = 3;
  std::size_t n = 1;
  unsigned deg = 4;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  unsigned hmax = 5;
};

Report cmd_verify(const std::string& which, const VerifyArgs& a) {
  Report r;
  r.command = "verify " + which;
  bool ok = true;
  auto push = [&](const VerificationResult& v) {
    r.results.push_back(verification_json(v));
    ok = ok && v.holds;
  };
  auto push_sweep = [&](const SweepResult& s) {
    r.results.push_back(sweep_json(s));
    ok = ok && s.holds();
  };
  if (which == "pc1") {
    r.inputs["k"] = a.k;
    push(verify_pc1(a.k));
  } else if (which == "lemma1") {
    r.inputs["k"] = a.k;
    push(verify_lemma1(a.k));
  } else if (which == "pc2") {
    r.inputs["k"] = a.k;
    push(verify_pc2(a.k));
  } else if (which == "distr") {
    push(verify_distr());
  } else if (which == "wick") {
    r.inputs = {{"l", a.l}, {"m", a.m}, {"trials", a.trials}};
    r.seed = a.seed;
    push_sweep(verify_wick(a.l, a.m, a.trials, a.seed));
  } else if (which == "transposition") {
    r.inputs = {{"l", a.l}, {"m", a.m}, {"trials", a.trials}};
    r.seed = a.seed;
    push_sweep(verify_transposition(a.l, a.m, a.trials, a.seed));
  } else if (which == "moyal") {
    r.inputs = {{"n", a.n}, {"deg", a.deg}, {"trials", a.trials}};
    r.seed = a.seed;
    push_sweep(verify_moyal(a.n, a.deg, a.trials, a.seed));
  } else if (which == "bernoulli") {
    r.inputs["hmax"] = a.hmax;
    auto c = bernoulli_coeffs(a.hmax);
    for (unsigned h = 1; h <= a.hmax; ++h) {
      Scalar b = bernoulli_number(2 * h);
      bool match = c[h - 1] * factorial(2 * h) == b;
      r.results.push_back({{"h", h},
                           {"c_h", to_string(c[h - 1])},
                           {"B_2h", to_string(b)},
                           {"c_h_equals_B_2h_over_(2h)!", match}});
      ok = ok && match;
    }
  } else {
    throw AlgebraError(ErrorKind::BadArgument,
                       "unknown identity '" + which + "'");
  }
  bool_verdict(r, ok, "holds", "FAILS");
  return r;
}

void print_error(const AlgebraError& e, bool as_json, std::ostream& err) {
  if (as_json) {
    json j{{"kind", to_string(e.kind())}, {"message", e.what()}};
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
      j["line"] = p->line();
      j["column"] = p->column();
    }
    err << json{{"error", j}}.dump() << '\n';
  } else {
    err << "error: " << e.what() << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Symmetrization quantization toolkit"};
  app.name("symq");
  // --h names the Hamiltonian, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit the report as JSON");

  std::function<Report()> action;

  AlgebraChoice validate_alg;
  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "Check an algebra definition");
  validate->add_option("file", validate_file, "Algebra definition (JSON)");
  validate_alg.attach(validate);
  validate->callback([&] {
    action = [&] { return cmd_validate(validate_alg, validate_file); };
  });

  AlgebraChoice sym_alg;
  std::string sym_expr;
  bool sym_nf = false;
  auto* symc = app.add_subcommand("symmetrize", "Symmetrize a polynomial");
  sym_alg.attach(symc);
  symc->add_option("-e,--expr", sym_expr, "Polynomial")->required();
  symc->add_flag("--normal-form", sym_nf, "Reduce modulo the relations");
  symc->callback([&] {
    action = [&] { return cmd_symmetrize(sym_alg, sym_expr, sym_nf); };
  });

  AlgebraChoice br_alg;
  std::string br_h, br_f;
  auto* brc = app.add_subcommand("bracket", "Leibniz bracket {H, F}_N");
  br_alg.attach(brc);
  brc->add_option("--h", br_h, "H")->required();
  brc->add_option("--f", br_f, "F")->required();
  brc->callback([&] { action = [&] { return cmd_bracket(br_alg, br_h, br_f); }; });

  AlgebraChoice co_alg;
  std::string co_h, co_f;
  auto* coc = app.add_subcommand(
      "correspond", "Compare [H^sym, F^sym] with ({H, F}_N)^sym");
  co_alg.attach(coc);
  coc->add_option("--h", co_h, "H")->required();
  coc->add_option("--f", co_f, "F")->required();
  coc->callback(
      [&] { action = [&] { return cmd_correspond(co_alg, co_h, co_f); }; });

  AlgebraChoice q_alg;
  std::string q_set;
  bool q_indep = false;
  auto* qc = app.add_subcommand("quantize-check",
                                "Check the commutators of a quantized set");
  q_alg.attach(qc);
  qc->add_option("--set", q_set, "Set definition (JSON)")->required();
  qc->add_flag("--assume-poly-independent", q_indep,
               "Treat the generators as polynomially independent");
  qc->callback(
      [&] { action = [&] { return cmd_quantize(q_alg, q_set, q_indep); }; });

  AlgebraChoice ca_alg;
  std::string ca_expr;
  std::size_t ca_trials = 10;
  std::uint64_t ca_seed = 1;
  auto* cac = app.add_subcommand("casimir", "Casimir check and quantization");
  ca_alg.attach(cac);
  cac->add_option("-e,--expr", ca_expr, "Candidate C")->required();
  cac->add_option("--trials", ca_trials, "Random spot checks");
  cac->add_option("--seed", ca_seed, "Seed for the spot checks");
  cac->callback([&] {
    action = [&] { return cmd_casimir(ca_alg, ca_expr, ca_trials, ca_seed); };
  });

  std::string vwhich;
  VerifyArgs va;
  bool trials_given = false;
  auto* vc = app.add_subcommand("verify", "Verify an algebraic identity");
  vc->add_option("identity", vwhich,
                 "pc1, lemma1, pc2, distr, wick, transposition, moyal, bernoulli")
      ->required();
  vc->add_option("--k", va.k, "Number of symmetrized factors");
  vc->add_option("--l", va.l, "Size of the first block (wick, transposition)");
  vc->add_option("--m", va.m, "Size of the second block (wick, transposition)");
  vc->add_option("--n", va.n, "Degrees of freedom (moyal)");
  vc->add_option("--deg", va.deg, "Maximum degree of H and F (moyal)");
  auto* trials_opt = vc->add_option("--trials", va.trials, "Random instances");
  vc->add_option("--seed", va.seed, "Seed");
  vc->add_option("--hmax", va.hmax, "Number of coefficients (bernoulli)");
  vc->callback([&] {
    trials_given = trials_opt->count() > 0;
    action = [&] {
      VerifyArgs a = va;
      if (!trials_given && vwhich != "wick") a.trials = 50;
      return cmd_verify(vwhich, a);
    };
  });

  std::string ce_case;
  auto* cec = app.add_subcommand("counterexample",
                                 "Witness where the correspondence fails");
  cec->add_option("--case", ce_case, "Bracket case")->required();
  cec->callback([&] { action = [&] { return cmd_counterexample(ce_case); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Report r = action();
    if (as_json) {
      out << r.to_json().dump(2) << '\n';
    } else {
      print_text(r, out);
    }
    return r.exit_code;
  } catch (const AlgebraError& e) {
    print_error(e, as_json, err);
    return kInputError;
  } catch (const std::exception& e) {
    print_error(AlgebraError(ErrorKind::MalformedInput, e.what()), as_json, err);
    return kInputError;
  }
}

}  // namespace symq::cli
