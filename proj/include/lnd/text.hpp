#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "lnd/error.hpp"
#include "lnd/polynomial.hpp"

namespace lnd {

// Recursive-descent parser for the polynomial text syntax:
//   x^2*y - 3/2*z,  2x(y+1),  (x+y)^3 / 4
// '*' between factors is optional; '/' divides by a nonzero constant only.
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, Context ctx, std::size_t line = 1, std::size_t column = 1)
      : text_(text), ctx_(std::move(ctx)), line_(line), column_(column) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("expected a polynomial");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  Polynomial expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      bool minus = peek() == '-';
      ++pos_;
      Polynomial t = term();
      if (minus) acc -= t; else acc += t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip_space();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        std::size_t at = pos_;
        ++pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail_at("division by a non-constant or zero", at);
        acc = acc * d.constant_term().inverse();
      } else if (starts_primary(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    Polynomial base = primary();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected an exponent after '^'");
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 9) fail_at("exponent too large", start);
      base = base.pow(std::stoull(digits));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return Polynomial::constant(ctx_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ctx_->index_of(name);
      if (!idx) fail_at("unknown variable '" + name + "'", start);
      return Polynomial::variable(ctx_, *idx);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (at_end()) fail("unexpected end of polynomial");
    fail(std::string("unexpected '") + c + "'");
  }

  static bool starts_primary(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, line_, column_ + at);
  }

  std::string_view text_;
  Context ctx_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(std::string_view text, const Context& ctx) {
  return PolynomialParser(text, ctx).parse();
}

}  // namespace lnd
