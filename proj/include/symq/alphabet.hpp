#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symq {

using Letter = std::uint16_t;

// Caps on word length and on the number of arguments expanded by sym_k.
// Work beyond the caps is refused with AlgebraError rather than attempted.
struct Limits {
  std::size_t degree_cap = 12;
  std::size_t sym_cap = 8;
};

// Named generators of a free algebra plus the names of central parameters
// that may appear in coefficients.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> generators,
           std::vector<std::string> central_params = {}, Limits limits = {});

  std::size_t size() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<std::string>& central_params() const { return params_; }
  const std::string& name(Letter g) const { return generators_.at(g); }
  const Limits& limits() const { return limits_; }

  std::optional<Letter> find(std::string_view name) const;
  std::optional<std::size_t> find_param(std::string_view name) const;

  bool same_as(const Alphabet& other) const {
    return this == &other || (generators_ == other.generators_ &&
                              params_ == other.params_);
  }

 private:
  std::vector<std::string> generators_;
  std::vector<std::string> params_;
  Limits limits_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> generators,
                          std::vector<std::string> central_params = {},
                          Limits limits = {});

// Throws AlgebraError(ContextMismatch) unless both alphabets agree.
void require_same(const AlphabetPtr& a, const AlphabetPtr& b);

}  // namespace symq
