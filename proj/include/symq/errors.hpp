#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symq {

enum class ErrorKind {
  ContextMismatch,
  DegreeCapExceeded,
  SymCapExceeded,
  UnknownBracket,
  UnsupportedCase,
  InvalidRelations,
  MalformedInput,
  Parse,
  BadArgument,
};

const char* to_string(ErrorKind kind);

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry a 1-based line/column into the offending source.
class ParseError : public AlgebraError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : AlgebraError(ErrorKind::Parse,
                     what + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace symq
