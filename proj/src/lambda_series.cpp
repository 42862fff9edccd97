// SPDX-License-Identifier: Apache-2.0

#include "lambda_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sequences.hpp"

namespace conifold {

void LambdaSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    min_exp_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) {
    min_exp_ = max_exp_ + 1;
    return;
  }
  if (min_exp_ < kPoleFloor) {
    throw std::domain_error("series pole deeper than x^-2 (order " +
                            std::to_string(min_exp_) + ")");
  }
}

LambdaSeries::LambdaSeries(int min_exp, std::vector<Rational> coeffs)
    : min_exp_(min_exp),
      max_exp_(min_exp + static_cast<int>(coeffs.size()) - 1),
      coeffs_(std::move(coeffs)) {
  normalize();
}

LambdaSeries LambdaSeries::zero(int max_exp) {
  LambdaSeries s;
  s.min_exp_ = max_exp + 1;
  s.max_exp_ = max_exp;
  return s;
}

LambdaSeries LambdaSeries::one(int max_exp) {
  return monomial(0, Rational(1), max_exp);
}

LambdaSeries LambdaSeries::monomial(int exp, Rational coeff, int max_exp) {
  if (max_exp < exp) throw std::invalid_argument("monomial beyond truncation");
  if (coeff.is_zero()) return zero(max_exp);
  std::vector<Rational> c(static_cast<std::size_t>(max_exp - exp) + 1);
  c[0] = std::move(coeff);
  return LambdaSeries(exp, std::move(c));
}

LambdaSeries LambdaSeries::from_terms(const std::map<int, Rational>& terms,
                                      int max_exp) {
  int lo = max_exp + 1;
  for (const auto& [e, c] : terms) {
    if (e > max_exp)
      throw std::invalid_argument("term beyond requested truncation");
    if (!c.is_zero()) lo = std::min(lo, e);
  }
  if (lo > max_exp) return zero(max_exp);
  std::vector<Rational> c(static_cast<std::size_t>(max_exp - lo) + 1);
  for (const auto& [e, v] : terms) {
    if (e >= lo) c[static_cast<std::size_t>(e - lo)] = v;
  }
  return LambdaSeries(lo, std::move(c));
}

LambdaSeries LambdaSeries::exp_series(int max_exp) {
  if (max_exp < 0) return zero(max_exp);
  std::vector<Rational> c(static_cast<std::size_t>(max_exp) + 1);
  for (int k = 0; k <= max_exp; ++k) {
    c[static_cast<std::size_t>(k)] =
        Rational(mpz_class(1), factorial(static_cast<unsigned>(k)));
  }
  return LambdaSeries(0, std::move(c));
}

Rational LambdaSeries::coeff(int exp) const {
  if (exp > max_exp_)
    throw std::out_of_range("coefficient beyond truncation order");
  if (exp < min_exp_) return Rational();
  return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

LambdaSeries LambdaSeries::truncated(int new_max_exp) const {
  if (new_max_exp >= max_exp_) return *this;
  LambdaSeries r = *this;
  r.max_exp_ = new_max_exp;
  if (new_max_exp < min_exp_) {
    r.coeffs_.clear();
    r.min_exp_ = new_max_exp + 1;
  } else {
    r.coeffs_.resize(static_cast<std::size_t>(new_max_exp - min_exp_) + 1);
    r.normalize();
  }
  return r;
}

LambdaSeries LambdaSeries::scaled_variable(const Rational& c) const {
  if (c.is_zero())
    throw std::invalid_argument("variable substitution by zero");
  LambdaSeries r = *this;
  Rational p = c.pow(min_exp_);
  for (auto& v : r.coeffs_) {
    v *= p;
    p *= c;
  }
  return r;
}

LambdaSeries LambdaSeries::shifted(int shift) const {
  LambdaSeries r = *this;
  r.min_exp_ += shift;
  r.max_exp_ += shift;
  if (!r.coeffs_.empty() && r.min_exp_ < kPoleFloor) {
    throw std::domain_error("shift drives the pole deeper than x^-2");
  }
  return r;
}

LambdaSeries LambdaSeries::inverse() const {
  if (coeffs_.empty()) throw std::domain_error("inverse of the zero series");
  // Factor x^d with d = order; invert the unit part by the division
  // recurrence.  The result keeps the same count of known coefficients.
  const int d = min_exp_;
  const std::size_t m = coeffs_.size();
  std::vector<Rational> v(m);
  v[0] = Rational(1) / coeffs_[0];
  for (std::size_t k = 1; k < m; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      acc += coeffs_[j] * v[k - j];
    }
    v[k] = -acc / coeffs_[0];
  }
  return LambdaSeries(-d, std::move(v));
}

LambdaSeries LambdaSeries::operator-() const {
  LambdaSeries r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

LambdaSeries operator+(const LambdaSeries& a, const LambdaSeries& b) {
  const int max = std::min(a.max_exp_, b.max_exp_);
  const int lo = std::min(std::min(a.min_exp_, b.min_exp_), max + 1);
  std::vector<Rational> c(static_cast<std::size_t>(max - lo) + 1);
  for (int e = lo; e <= max; ++e) {
    Rational v;
    if (e >= a.min_exp_ && e <= a.max_exp_)
      v += a.coeffs_[static_cast<std::size_t>(e - a.min_exp_)];
    if (e >= b.min_exp_ && e <= b.max_exp_)
      v += b.coeffs_[static_cast<std::size_t>(e - b.min_exp_)];
    c[static_cast<std::size_t>(e - lo)] = std::move(v);
  }
  return LambdaSeries(lo, std::move(c));
}

LambdaSeries operator-(const LambdaSeries& a, const LambdaSeries& b) {
  return a + (-b);
}

LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b) {
  // The unknown tail of one factor meets the other factor's lowest term
  // first, which caps the exponents the product can claim:
  //   valid through min(a.max + ord(b), b.max + ord(a)).
  // For a stored-zero factor the first possibly-nonzero exponent is
  // max_exp + 1, which is exactly its min_exp in canonical form.
  const int valid_max =
      std::min(a.max_exp_ + b.min_exp_, b.max_exp_ + a.min_exp_);
  if (a.coeffs_.empty() || b.coeffs_.empty())
    return LambdaSeries::zero(valid_max);
  const int lo = a.min_exp_ + b.min_exp_;
  std::vector<Rational> c(static_cast<std::size_t>(valid_max - lo) + 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    const int ea = a.min_exp_ + static_cast<int>(i);
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      const int e = ea + b.min_exp_ + static_cast<int>(j);
      if (e > valid_max) break;
      c[static_cast<std::size_t>(e - lo)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LambdaSeries(lo, std::move(c));
}

LambdaSeries operator*(const LambdaSeries& a, const Rational& c) {
  LambdaSeries r = a;
  for (auto& v : r.coeffs_) v *= c;
  r.normalize();
  return r;
}

bool operator==(const LambdaSeries& a, const LambdaSeries& b) {
  const int max = std::min(a.max_exp_, b.max_exp_);
  const int lo = std::min(a.min_exp_, b.min_exp_);
  for (int e = lo; e <= max; ++e) {
    Rational va = (e >= a.min_exp_ && e <= a.max_exp_)
                      ? a.coeffs_[static_cast<std::size_t>(e - a.min_exp_)]
                      : Rational();
    Rational vb = (e >= b.min_exp_ && e <= b.max_exp_)
                      ? b.coeffs_[static_cast<std::size_t>(e - b.min_exp_)]
                      : Rational();
    if (va != vb) return false;
  }
  return true;
}

LambdaSeries central_difference_symbol(long n, int max_exp) {
  if (n < 0) throw std::invalid_argument("mode index must be >= 0");
  // A zero mode means the shift acts as the identity, so the second
  // difference vanishes identically.
  if (n == 0) return LambdaSeries::zero(max_exp);
  std::map<int, Rational> terms;
  const Rational n_squared = Rational(n).pow(2);
  Rational factor = n_squared;  // n^{2k} running power
  for (int k = 1; 2 * k <= max_exp; ++k) {
    const int sign = (k % 2 == 1) ? -1 : 1;
    terms[2 * k] = Rational(2 * sign) * factor /
                   Rational(factorial(static_cast<unsigned>(2 * k)), mpz_class(1));
    factor *= n_squared;
  }
  return LambdaSeries::from_terms(terms, max_exp);
}

}  // namespace conifold
