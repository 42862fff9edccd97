// SPDX-License-Identifier: Apache-2.0

#include "rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace conifold {

namespace {

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer in rational literal");
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("sign without digits in rational literal");
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("invalid character in rational literal: '" +
                                  std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);  // mpz_set_str rejects '+'
  return mpz_class(std::string(text), 10);
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den)
    : value_(std::move(num), std::move(den)) {
  if (sgn(value_.get_den()) == 0)
    throw std::invalid_argument("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text), mpz_class(1));
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (sgn(den) <= 0)
    throw std::invalid_argument("rational denominator must be positive: '" +
                                std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  return value_.get_str();  // mpq renders "p/q", or "p" when den == 1
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  mpz_class base_num = num();
  mpz_class base_den = den();
  unsigned long mag;
  if (e < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    std::swap(base_num, base_den);
    mag = static_cast<unsigned long>(-(e + 1)) + 1ul;
  } else {
    mag = static_cast<unsigned long>(e);
  }
  mpz_class rn, rd;
  mpz_pow_ui(rn.get_mpz_t(), base_num.get_mpz_t(), mag);
  mpz_pow_ui(rd.get_mpz_t(), base_den.get_mpz_t(), mag);
  return Rational(std::move(rn), std::move(rd));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace conifold
