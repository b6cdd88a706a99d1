#include "symq/alphabet.hpp"

#include <limits>
#include <set>

#include "symq/errors.hpp"

namespace symq {

Alphabet::Alphabet(std::vector<std::string> generators,
                   std::vector<std::string> central_params, Limits limits)
    : generators_(std::move(generators)),
      params_(std::move(central_params)),
      limits_(limits) {
  if (generators_.size() > std::numeric_limits<Letter>::max()) {
    throw AlgebraError(ErrorKind::MalformedInput, "too many generators");
  }
  std::set<std::string> seen;
  for (const auto& n : generators_) {
    if (n.empty() || !seen.insert(n).second) {
      throw AlgebraError(ErrorKind::MalformedInput,
                         "empty or duplicate name '" + n + "'");
    }
  }
  for (const auto& n : params_) {
    if (n.empty() || !seen.insert(n).second) {
      throw AlgebraError(ErrorKind::MalformedInput,
                         "empty or duplicate name '" + n + "'");
    }
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

std::optional<std::size_t> Alphabet::find_param(std::string_view name) const {
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (params_[i] == name) return i;
  }
  return std::nullopt;
}

AlphabetPtr make_alphabet(std::vector<std::string> generators,
                          std::vector<std::string> central_params,
                          Limits limits) {
  return std::make_shared<const Alphabet>(std::move(generators),
                                          std::move(central_params), limits);
}

void require_same(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!a || !b || !a->same_as(*b)) {
    throw AlgebraError(ErrorKind::ContextMismatch,
                       "operands belong to different generator contexts");
  }
}

}  // namespace symq
