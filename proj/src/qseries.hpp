// SPDX-License-Identifier: Apache-2.0

#ifndef CONIFOLD_QSERIES_HPP
#define CONIFOLD_QSERIES_HPP

#include <map>
#include <stdexcept>
#include <utility>

#include "lambda_series.hpp"
#include "rational.hpp"

namespace conifold {

// Truncated power series in one q-variable, sparse over degrees 0..trunc.
// Coefficients are Rational or LambdaSeries depending on the instantiation.
// Absent degree means zero; stored coefficients are nonzero.  As with
// LambdaSeries, combining series of different truncation yields the minimum,
// and equality is coefficient-wise up to the common truncation.
template <typename Coeff>
class QSeries {
 public:
  explicit QSeries(int trunc) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("negative q-truncation");
  }

  int trunc() const { return trunc_; }
  const std::map<int, Coeff>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Coeff coeff(int degree) const {
    if (degree > trunc_)
      throw std::out_of_range("q-degree beyond truncation");
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Coeff() : it->second;
  }

  void set_coeff(int degree, Coeff value) {
    if (degree < 0 || degree > trunc_)
      throw std::out_of_range("q-degree outside [0, trunc]");
    using conifold::is_zero;
    if (is_zero(value)) {
      coeffs_.erase(degree);
    } else {
      coeffs_.insert_or_assign(degree, std::move(value));
    }
  }

  QSeries operator-() const {
    QSeries r(trunc_);
    for (const auto& [n, c] : coeffs_) r.coeffs_.emplace(n, -c);
    return r;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc_, b.trunc_));
    for (const auto& [n, c] : a.coeffs_) {
      if (n <= r.trunc_) r.accumulate(n, c);
    }
    for (const auto& [n, c] : b.coeffs_) {
      if (n <= r.trunc_) r.accumulate(n, c);
    }
    return r;
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    return a + (-b);
  }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc_, b.trunc_));
    for (const auto& [n, ca] : a.coeffs_) {
      for (const auto& [m, cb] : b.coeffs_) {
        if (n + m > r.trunc_) break;
        r.accumulate(n + m, ca * cb);
      }
    }
    return r;
  }

  friend QSeries operator*(const QSeries& a, const Rational& c) {
    QSeries r(a.trunc_);
    if (c.is_zero()) return r;
    for (const auto& [n, v] : a.coeffs_) r.set_coeff(n, v * c);
    return r;
  }
  friend QSeries operator*(const Rational& c, const QSeries& a) {
    return a * c;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    using conifold::is_zero;
    const int max = std::min(a.trunc_, b.trunc_);
    for (int n = 0; n <= max; ++n) {
      const bool in_a = a.coeffs_.count(n) > 0;
      const bool in_b = b.coeffs_.count(n) > 0;
      if (!in_a && !in_b) continue;
      if (in_a && in_b) {
        if (!(a.coeffs_.at(n) == b.coeffs_.at(n))) return false;
      } else {
        const Coeff& c = in_a ? a.coeffs_.at(n) : b.coeffs_.at(n);
        if (!is_zero(c)) return false;
      }
    }
    return true;
  }
  friend bool operator!=(const QSeries& a, const QSeries& b) {
    return !(a == b);
  }

 private:
  // Adds `value` into the degree-n slot.  Unlike set_coeff(coeff(n) + value)
  // this never routes the sum through a default-constructed coefficient,
  // whose truncation window would be meaningless for series-valued Coeff.
  void accumulate(int degree, const Coeff& value) {
    using conifold::is_zero;
    if (is_zero(value)) return;
    auto it = coeffs_.find(degree);
    if (it == coeffs_.end()) {
      coeffs_.emplace(degree, value);
    } else {
      it->second = it->second + value;
      if (is_zero(it->second)) coeffs_.erase(it);
    }
  }

  int trunc_;
  std::map<int, Coeff> coeffs_;
};

// theta_q = q d/dq: multiplies the degree-n coefficient by n.
template <typename Coeff>
QSeries<Coeff> theta_q(const QSeries<Coeff>& s) {
  QSeries<Coeff> r(s.trunc());
  for (const auto& [n, c] : s.terms()) {
    if (n != 0) r.set_coeff(n, c * Rational(n));
  }
  return r;
}

// theta_q applied m times (m >= 0).
template <typename Coeff>
QSeries<Coeff> theta_q_pow(const QSeries<Coeff>& s, unsigned m) {
  if (m == 0) return s;
  QSeries<Coeff> r(s.trunc());
  for (const auto& [n, c] : s.terms()) {
    if (n != 0) r.set_coeff(n, c * Rational(n).pow(static_cast<long>(m)));
  }
  return r;
}

// Inverse of theta_q^m, fixed by requiring a vanishing constant term:
// the degree-n coefficient is divided by n^m.  Rejects input with a
// nonzero constant term, which has no preimage under this convention.
template <typename Coeff>
QSeries<Coeff> theta_q_inv_pow(const QSeries<Coeff>& s, unsigned m) {
  if (m == 0) return s;
  QSeries<Coeff> r(s.trunc());
  for (const auto& [n, c] : s.terms()) {
    if (n == 0)
      throw std::domain_error(
          "theta_q inverse of a series with constant term");
    r.set_coeff(n, c * Rational(n).pow(-static_cast<long>(m)));
  }
  return r;
}

// Multiplicative inverse of a rational-coefficient q-series with nonzero
// constant term, by the division recurrence.
QSeries<Rational> invert(const QSeries<Rational>& s);

}  // namespace conifold

#endif  // CONIFOLD_QSERIES_HPP
