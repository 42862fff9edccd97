// SPDX-License-Identifier: Apache-2.0

#ifndef CONIFOLD_LAMBDA_SERIES_HPP
#define CONIFOLD_LAMBDA_SERIES_HPP

#include <map>
#include <vector>

#include "rational.hpp"

namespace conifold {

// Truncated Laurent series in one formal variable (the string coupling, or a
// bookkeeping variable such as w or s).  A value represents
//
//     sum_{e = min_exp}^{max_exp} coeff(e) * x^e  +  O(x^{max_exp + 1})
//
// and is canonical: the stored window starts at the lowest nonzero
// coefficient, and the identically-zero truncation is stored with an empty
// window (min_exp = max_exp + 1).  The pole depth is capped at x^{-2}
// everywhere; constructing or producing anything deeper is an error.
//
// Truncation semantics: results never claim more precision than the inputs
// support.  Equality compares coefficients up to the common truncation order.
class LambdaSeries {
 public:
  static constexpr int kPoleFloor = -2;

  // Zero with truncation order 0.
  LambdaSeries() : min_exp_(1), max_exp_(0) {}

  // Coefficients for exponents min_exp, min_exp + 1, ... in one dense run.
  LambdaSeries(int min_exp, std::vector<Rational> coeffs);

  static LambdaSeries zero(int max_exp);
  static LambdaSeries one(int max_exp);
  static LambdaSeries monomial(int exp, Rational coeff, int max_exp);
  static LambdaSeries from_terms(const std::map<int, Rational>& terms,
                                 int max_exp);

  // exp(x) truncated at max_exp.
  static LambdaSeries exp_series(int max_exp);

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest stored exponent; equals max_exp() + 1 for the zero series.
  int min_exp() const { return min_exp_; }
  int max_exp() const { return max_exp_; }

  // Coefficient at x^exp.  Exponents below the window are exact zeros;
  // asking beyond the truncation order is a caller bug and throws.
  Rational coeff(int exp) const;

  LambdaSeries truncated(int new_max_exp) const;

  // Substitutes x -> c x (c nonzero): coeff(e) picks up a factor c^e.
  LambdaSeries scaled_variable(const Rational& c) const;

  // Multiplies by x^shift (window and truncation both move).
  LambdaSeries shifted(int shift) const;

  // Multiplicative inverse; requires a nonzero series.  The result's pole
  // depth is minus the input's order, so inputs of order > 2 are rejected.
  LambdaSeries inverse() const;

  LambdaSeries operator-() const;
  friend LambdaSeries operator+(const LambdaSeries& a, const LambdaSeries& b);
  friend LambdaSeries operator-(const LambdaSeries& a, const LambdaSeries& b);
  friend LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b);
  friend LambdaSeries operator*(const LambdaSeries& a, const Rational& c);
  friend LambdaSeries operator*(const Rational& c, const LambdaSeries& a) {
    return a * c;
  }

  // True iff all coefficients agree up to the common truncation order.
  friend bool operator==(const LambdaSeries& a, const LambdaSeries& b);
  friend bool operator!=(const LambdaSeries& a, const LambdaSeries& b) {
    return !(a == b);
  }

 private:
  int min_exp_;
  int max_exp_;
  std::vector<Rational> coeffs_;  // dense over [min_exp_, max_exp_]

  void normalize();
};

inline bool is_zero(const LambdaSeries& s) { return s.is_zero(); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

// Series of the central second difference acting on the degree-n Fourier
// mode: e^{in x} - 2 + e^{-in x} = 2 cos(n x) - 2
//     = sum_{k >= 1} 2 (-1)^k (n x)^{2k} / (2k)!,
// truncated at max_exp.  Purely rational: the imaginary parts of the two
// shifts cancel identically.
LambdaSeries central_difference_symbol(long n, int max_exp);

}  // namespace conifold

#endif  // CONIFOLD_LAMBDA_SERIES_HPP
