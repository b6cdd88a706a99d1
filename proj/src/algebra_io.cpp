#include "symq/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "symq/errors.hpp"
#include "symq/expr.hpp"

namespace symq {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw AlgebraError(ErrorKind::MalformedInput, what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    malformed(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* key,
                                     bool required) {
  std::vector<std::string> out;
  if (!j.contains(key)) {
    if (required) malformed(std::string("missing field '") + key + "'");
    return out;
  }
  const json& arr = j.at(key);
  if (!arr.is_array()) malformed(std::string("'") + key + "' must be an array");
  for (const auto& v : arr) {
    if (!v.is_string()) {
      malformed(std::string("'") + key + "' must hold strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

CoeffPoly coeff_value(const json& v, const std::vector<std::string>& params) {
  if (v.is_number_integer()) return CoeffPoly(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return parse_coeff(v.get<std::string>(), params);
  malformed("coefficients must be strings or integers");
}

Letter lookup(const std::vector<std::string>& names, const std::string& n,
              const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == n) return static_cast<Letter>(i);
  }
  malformed(std::string("unknown ") + what + " '" + n + "'");
}

}  // namespace

RelationSystem algebra_from_json(const json& j) {
  if (!j.is_object()) malformed("algebra definition must be a JSON object");
  RelationSpec spec;
  spec.name = j.value("name", std::string("algebra"));
  const json& c = field(j, "case");
  if (!c.is_string()) malformed("'case' must be a string");
  spec.bracket_case = parse_bracket_case(c.get<std::string>());
  spec.generators = string_list(j, "generators", true);
  spec.extended_generators = string_list(j, "extended_generators", false);
  spec.central_params = string_list(j, "central_params", false);
  if (j.contains("limits")) {
    const json& lim = j.at("limits");
    if (!lim.is_object()) malformed("'limits' must be an object");
    spec.limits.degree_cap = lim.value("degree_cap", spec.limits.degree_cap);
    spec.limits.sym_cap = lim.value("sym_cap", spec.limits.sym_cap);
  }

  std::vector<std::string> t_names = spec.generators;
  t_names.insert(t_names.end(), spec.extended_generators.begin(),
                 spec.extended_generators.end());
  const bool constant = spec.bracket_case == BracketCase::Constant;
  const auto& targets =
      spec.bracket_case == BracketCase::General ? t_names : spec.generators;

  if (j.contains("brackets")) {
    const json& arr = j.at("brackets");
    if (!arr.is_array()) malformed("'brackets' must be an array");
    for (const auto& b : arr) {
      const json& i = field(b, "i");
      const json& jj = field(b, "j");
      if (!i.is_string() || !jj.is_string()) {
        malformed("bracket 'i' and 'j' must be generator names");
      }
      BracketSpec bs;
      bs.i = lookup(spec.generators, i.get<std::string>(), "generator");
      bs.j = lookup(spec.generators, jj.get<std::string>(), "generator");
      const json& terms = field(b, "terms");
      if (!terms.is_array()) malformed("'terms' must be an array");
      for (const auto& t : terms) {
        CoeffPoly coeff = t.contains("coeff")
                              ? coeff_value(t.at("coeff"), spec.central_params)
                              : CoeffPoly(1L);
        BracketTerm term{std::nullopt, coeff};
        if (t.contains("target")) {
          const json& tg = t.at("target");
          if (!tg.is_string()) malformed("'target' must be a string");
          if (constant) {
            term.coeff = coeff * parse_coeff(tg.get<std::string>(),
                                             spec.central_params);
          } else {
            term.target = lookup(targets, tg.get<std::string>(), "target");
          }
        }
        bs.terms.push_back(std::move(term));
      }
      spec.brackets.push_back(std::move(bs));
    }
  }
  return RelationSystem(std::move(spec));
}

json algebra_to_json(const RelationSystem& rel) {
  const RelationSpec& spec = rel.spec();
  json out;
  out["name"] = spec.name;
  out["case"] = to_string(spec.bracket_case);
  out["generators"] = spec.generators;
  out["extended_generators"] = spec.extended_generators;
  out["central_params"] = spec.central_params;
  out["limits"] = {{"degree_cap", spec.limits.degree_cap},
                   {"sym_cap", spec.limits.sym_cap}};
  const auto& t = *rel.t_alphabet();
  json brackets = json::array();
  for (const auto& b : spec.brackets) {
    json terms = json::array();
    for (const auto& term : b.terms) {
      json jt;
      if (term.target) jt["target"] = t.name(*term.target);
      jt["coeff"] = term.coeff.to_string(spec.central_params);
      terms.push_back(jt);
    }
    brackets.push_back({{"i", spec.generators[b.i]},
                        {"j", spec.generators[b.j]},
                        {"terms", terms}});
  }
  out["brackets"] = brackets;
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    malformed("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

RelationSystem load_algebra(const std::filesystem::path& path) {
  return algebra_from_json(read_json_file(path));
}

bool is_preset_name(const std::string& name) {
  return name == "so3" || name == "heisenberg" || name == "canonical" ||
         name.rfind("canonical:", 0) == 0;
}

RelationSystem preset_algebra(const std::string& name) {
  if (name == "so3") return so3_system();
  if (name == "heisenberg") return heisenberg_system();
  if (name == "canonical") return canonical_system(1);
  if (name.rfind("canonical:", 0) == 0) {
    std::string digits = name.substr(10);
    if (digits.empty() || digits.size() > 3 ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw AlgebraError(ErrorKind::BadArgument,
                         "canonical preset needs a size, e.g. canonical:2");
    }
    std::size_t n = std::stoul(digits);
    if (n == 0) {
      throw AlgebraError(ErrorKind::BadArgument, "canonical size must be >= 1");
    }
    return canonical_system(n);
  }
  throw AlgebraError(ErrorKind::BadArgument, "unknown preset '" + name + "'");
}

RelationSystem set_algebra(const json& j, const std::filesystem::path& set_path) {
  const json& a = field(j, "algebra");
  if (!a.is_string()) malformed("'algebra' must be a string");
  std::string name = a.get<std::string>();
  std::filesystem::path p = name;
  if (p.is_relative()) p = set_path.parent_path() / p;
  if (std::filesystem::exists(p)) return load_algebra(p);
  if (is_preset_name(name)) return preset_algebra(name);
  malformed("algebra '" + name + "' is neither a file nor a preset");
}

IntegrableSet parse_set(const json& j, const RelationSystem& rel) {
  if (!j.is_object()) malformed("set definition must be a JSON object");
  IntegrableSet out;
  out.central_sources = string_list(j, "centrals", true);
  out.other_sources = string_list(j, "others", false);
  if (out.central_sources.empty()) malformed("'centrals' must not be empty");
  for (const auto& s : out.central_sources) {
    out.centrals.push_back(parse_expr(s, rel.b_alphabet()));
  }
  for (const auto& s : out.other_sources) {
    out.others.push_back(parse_expr(s, rel.b_alphabet()));
  }
  return out;
}

}  // namespace symq
