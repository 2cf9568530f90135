#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "lnd/error.hpp"

namespace lnd {

using Integer = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  // Accepts "a" or "a/b" with optional sign.
  static Rational parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw InvalidArgument("malformed rational '" + text + "'");
    if (v.get_den() == 0) throw InvalidArgument("zero denominator");
    v.canonicalize();
    return Rational(v);
  }

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const {
    if (is_zero()) throw InvalidArgument("division by zero");
    return Rational(mpq_class(1) / value_);
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidArgument("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return value_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_;
};

}  // namespace lnd
