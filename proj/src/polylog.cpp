// SPDX-License-Identifier: Apache-2.0

#include "polylog.hpp"

#include "sequences.hpp"

namespace conifold {

QSeries<Rational> polylog_series(long s, int trunc) {
  QSeries<Rational> r(trunc);
  for (int n = 1; n <= trunc; ++n) {
    r.set_coeff(n, Rational(n).pow(-s));
  }
  return r;
}

RatFunc polylog_negative_closed(unsigned m) {
  // Li_0 = q/(1-q); each weight drop applies q d/dq once.
  RatFunc f(Polynomial::monomial(Rational(1), 1),
            Polynomial({Rational(1), Rational(-1)}));
  for (unsigned i = 0; i < m; ++i) f = theta_q(f);
  return f;
}

RatFunc polylog_negative_eulerian(unsigned m) {
  if (m == 0) return polylog_negative_closed(0);
  std::vector<Rational> a(m);
  for (unsigned k = 0; k < m; ++k) a[k] = Rational(eulerian(m, k), 1);
  const Polynomial num =
      Polynomial::monomial(Rational(1), 1) * Polynomial(std::move(a));
  Polynomial den = Polynomial::constant(Rational(1));
  const Polynomial one_minus_q({Rational(1), Rational(-1)});
  for (unsigned i = 0; i <= m; ++i) den = den * one_minus_q;
  return RatFunc(num, den);
}

}  // namespace conifold
