#include "symq/scalar.hpp"

#include <cctype>

#include "symq/errors.hpp"

namespace symq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ContextMismatch: return "context_mismatch";
    case ErrorKind::DegreeCapExceeded: return "degree_cap_exceeded";
    case ErrorKind::SymCapExceeded: return "sym_cap_exceeded";
    case ErrorKind::UnknownBracket: return "unknown_bracket";
    case ErrorKind::UnsupportedCase: return "unsupported_case";
    case ErrorKind::InvalidRelations: return "invalid_relations";
    case ErrorKind::MalformedInput: return "malformed_input";
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::BadArgument: return "bad_argument";
  }
  return "unknown";
}

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view{"1"}
                                             : text.substr(slash + 1);
  if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
    throw AlgebraError(ErrorKind::Parse,
                       "invalid rational literal '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class numerator(n, 10);
  mpz_class denominator(std::string(den), 10);
  if (denominator == 0) {
    throw AlgebraError(ErrorKind::Parse,
                       "zero denominator in '" + std::string(text) + "'");
  }
  Scalar q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

Scalar factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Scalar(f);
}

}  // namespace symq
