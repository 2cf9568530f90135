#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lnd {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VariableMismatch : public Error {
 public:
  using Error::Error;
};

class ExponentOverflow : public Error {
 public:
  ExponentOverflow() : Error("exponent overflow") {}
};

// A configurable work budget (Gröbner pairs, linear-algebra dimension) ran out.
// Signals "computation too large", never a wrong answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The input is zero where a nonzero element is required (e.g. a test element
// that already lies in the ideal it is tested against).
class Degenerate : public Error {
 public:
  using Error::Error;
};

// The operation is outside what the toolkit decides (e.g. gcd irreducibility
// over a ring with relations).
class Unsupported : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        message_(what) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace lnd
