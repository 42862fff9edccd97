// SPDX-License-Identifier: Apache-2.0

#ifndef CONIFOLD_RATIONAL_HPP
#define CONIFOLD_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace conifold {

// Arbitrary-precision rational, always kept in canonical form:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(mpz_class num, mpz_class den);

  // Parses "p/q" or "p" (base 10, optional sign on p).
  static Rational from_string(std::string_view text);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  // Renders "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  // b^e with e any integer; negative e requires b != 0.
  Rational pow(long e) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.value_ > b.value_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.value_ >= b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;  // canonical: GMP arithmetic preserves canonicity
};

}  // namespace conifold

#endif  // CONIFOLD_RATIONAL_HPP
