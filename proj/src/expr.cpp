#include "symq/expr.hpp"

#include <cctype>
#include <limits>

#include "symq/errors.hpp"

namespace symq {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Number;
      t.text = digits();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        advance();
        if (pos_ >= src_.size() ||
            !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          throw ParseError("expected denominator after '/'", line_, column_);
        }
        t.text += '/' + digits();
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Name;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        t.text += src_[pos_];
        advance();
      }
      return t;
    }
    switch (c) {
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_, column_);
    }
    t.text = std::string(1, c);
    advance();
    return t;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      advance();
    }
  }
  std::string digits() {
    std::string out;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      out += src_[pos_];
      advance();
    }
    return out;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view src, AlphabetPtr alphabet)
      : lexer_(src), alphabet_(std::move(alphabet)) {
    tok_ = lexer_.next();
  }

  CPoly parse() {
    if (tok_.kind == Tok::End) fail("empty expression");
    CPoly out = expr();
    if (tok_.kind != Tok::End) fail("unexpected '" + tok_.text + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, tok_.line, tok_.column);
  }
  void bump() { tok_ = lexer_.next(); }

  static bool starts_atom(Tok k) {
    return k == Tok::Number || k == Tok::Name || k == Tok::LParen;
  }

  CPoly expr() {
    CPoly out = term();
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      bool minus = tok_.kind == Tok::Minus;
      bump();
      CPoly t = term();
      if (minus) {
        out -= t;
      } else {
        out += t;
      }
    }
    return out;
  }

  CPoly term() {
    CPoly out = factor();
    for (;;) {
      if (tok_.kind == Tok::Star) {
        bump();
        out = out * factor();
      } else if (starts_atom(tok_.kind)) {
        out = out * factor();
      } else {
        return out;
      }
    }
  }

  CPoly factor() {
    if (tok_.kind == Tok::Minus) {
      bump();
      return -factor();
    }
    CPoly base = atom();
    if (tok_.kind != Tok::Caret) return base;
    bump();
    if (tok_.kind == Tok::Minus) fail("negative exponent");
    if (tok_.kind != Tok::Number || tok_.text.find('/') != std::string::npos) {
      fail("expected a non-negative integer exponent");
    }
    if (tok_.text.size() > 4) fail("exponent too large");
    unsigned e = static_cast<unsigned>(std::stoul(tok_.text));
    bump();
    return pow(base, e);
  }

  CPoly atom() {
    switch (tok_.kind) {
      case Tok::Number: {
        Scalar v;
        try {
          v = parse_scalar(tok_.text);
        } catch (const AlgebraError& e) {
          fail(e.what());
        }
        bump();
        return CPoly::constant(alphabet_, CoeffPoly(v));
      }
      case Tok::Name: {
        if (auto g = alphabet_->find(tok_.text)) {
          bump();
          return CPoly::generator(alphabet_, *g);
        }
        if (auto d = alphabet_->find_param(tok_.text)) {
          bump();
          return CPoly::constant(alphabet_, CoeffPoly::param(*d));
        }
        fail("unknown identifier '" + tok_.text + "'");
      }
      case Tok::LParen: {
        bump();
        CPoly inner = expr();
        if (tok_.kind != Tok::RParen) fail("expected ')'");
        bump();
        return inner;
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + tok_.text + "'");
    }
  }

  Lexer lexer_;
  AlphabetPtr alphabet_;
  Token tok_;
};

}  // namespace

CPoly parse_expr(std::string_view src, const AlphabetPtr& alphabet) {
  return Parser(src, alphabet).parse();
}

CoeffPoly parse_coeff(std::string_view src,
                      const std::vector<std::string>& params) {
  auto alphabet = make_alphabet({}, params);
  CPoly p = Parser(src, alphabet).parse();
  if (p.is_zero()) return CoeffPoly();
  return p.terms().begin()->second;
}

}  // namespace symq
