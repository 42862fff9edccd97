// SPDX-License-Identifier: Apache-2.0

#include "ratfunc.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace conifold {

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial Polynomial::constant(Rational c) {
  return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::monomial(Rational c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational();
  return coeffs_[static_cast<size_t>(k)];
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) v[i] += b.coeffs_[i];
  }
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
  if (c.is_zero()) return Polynomial();
  Polynomial r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    v[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(
    const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = *this;
  if (rem.degree() < d.degree()) return {Polynomial(), rem};
  std::vector<Rational> q(
      static_cast<size_t>(rem.degree() - d.degree()) + 1);
  const Rational lead = d.coeffs_.back();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const int shift = rem.degree() - d.degree();
    const Rational factor = rem.coeffs_.back() / lead;
    q[static_cast<size_t>(shift)] = factor;
    rem = rem - Polynomial::monomial(factor, shift) * d;
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divrem(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * (Rational(1) / x.coeffs().back());
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        mag = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    const bool unit = mag.is_one();
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

RatFunc::RatFunc(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divrem(g).first;
    den_ = den_.divrem(g).first;
  }
  // Scale so the lowest-degree nonzero denominator coefficient is 1.
  Rational low;
  for (int k = 0; k <= den_.degree(); ++k) {
    if (!den_.coeff(k).is_zero()) {
      low = den_.coeff(k);
      break;
    }
  }
  const Rational inv = Rational(1) / low;
  num_ = num_ * inv;
  den_ = den_ * inv;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc theta_q(const RatFunc& f) {
  const Polynomial q = Polynomial::monomial(Rational(1), 1);
  const Polynomial n = f.num().derivative() * f.den() -
                       f.num() * f.den().derivative();
  return RatFunc(q * n, f.den() * f.den());
}

QSeries<Rational> RatFunc::expand(int trunc) const {
  if (den_.coeff(0).is_zero())
    throw std::domain_error("expanding at a pole of the denominator");
  QSeries<Rational> n(trunc);
  for (int k = 0; k <= std::min(trunc, num_.degree()); ++k) {
    n.set_coeff(k, num_.coeff(k));
  }
  QSeries<Rational> d(trunc);
  for (int k = 0; k <= std::min(trunc, den_.degree()); ++k) {
    d.set_coeff(k, den_.coeff(k));
  }
  return n * invert(d);
}

std::string RatFunc::str() const {
  if (den_ == Polynomial::constant(Rational(1))) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ") / (" << den_.str() << ")";
  return os.str();
}

}  // namespace conifold
