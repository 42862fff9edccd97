// SPDX-License-Identifier: Apache-2.0

#ifndef CONIFOLD_RATFUNC_HPP
#define CONIFOLD_RATFUNC_HPP

#include <string>
#include <vector>

#include "qseries.hpp"
#include "rational.hpp"

namespace conifold {

// Dense univariate polynomial over Rational; coeffs_[k] multiplies q^k.
// Canonical form: no trailing zero coefficients (zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(Rational c);
  static Polynomial monomial(Rational c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial derivative() const;
  // Quotient and remainder of division by a nonzero polynomial.
  std::pair<Polynomial, Polynomial> divrem(const Polynomial& d) const;

  std::string str() const;  // e.g. "1 + 4*q + q^2"

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// Monic greatest common divisor (gcd of zero polynomials is zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Rational function num/den in q, kept reduced, with the lowest-degree
// nonzero coefficient of the denominator normalized to 1 so that equal
// functions have identical representations.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Polynomial::constant(Rational(1))) {}
  RatFunc(Polynomial num, Polynomial den);  // throws if den is zero

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }

  // Power-series expansion around q = 0 through degree trunc; requires a
  // denominator with nonzero constant term.
  QSeries<Rational> expand(int trunc) const;

  std::string str() const;  // "num / (den)" or just "num"

 private:
  void reduce();
  Polynomial num_;
  Polynomial den_;
};

// q d/dq acting on a rational function: q (n' d - n d') / d^2.
RatFunc theta_q(const RatFunc& f);

}  // namespace conifold

#endif  // CONIFOLD_RATFUNC_HPP
