#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "symq/c_poly.hpp"
#include "symq/relations.hpp"

namespace symq {

// Algebra definition:
//   {"name": "so3", "case": "linear",
//    "generators": ["L1", "L2", "L3"], "extended_generators": [],
//    "central_params": [],
//    "brackets": [{"i": "L1", "j": "L2",
//                  "terms": [{"target": "L3", "coeff": "1"}]}, ...],
//    "limits": {"degree_cap": 12, "sym_cap": 8}}
// In the constant case a term has no target, or a target that is an
// expression in the central parameters multiplying coeff. Coefficients are
// strings (expressions over central_params) or integers.
// Throws AlgebraError(MalformedInput) on schema errors.
RelationSystem algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const RelationSystem& rel);
RelationSystem load_algebra(const std::filesystem::path& path);

// "canonical:<n>" (or "canonical" for n = 1), "so3", "heisenberg".
RelationSystem preset_algebra(const std::string& name);
bool is_preset_name(const std::string& name);

// {"algebra": "<file or preset>", "centrals": [...], "others": [...]}.
struct IntegrableSet {
  std::vector<std::string> central_sources;
  std::vector<std::string> other_sources;
  std::vector<CPoly> centrals;
  std::vector<CPoly> others;
};

// Resolves the "algebra" entry of a set file: a preset name, or a path
// relative to the set file's directory.
RelationSystem set_algebra(const nlohmann::json& j,
                           const std::filesystem::path& set_path);
IntegrableSet parse_set(const nlohmann::json& j, const RelationSystem& rel);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace symq
