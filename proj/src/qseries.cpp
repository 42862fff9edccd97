// SPDX-License-Identifier: Apache-2.0

#include "qseries.hpp"

namespace conifold {

QSeries<Rational> invert(const QSeries<Rational>& s) {
  const Rational u0 = s.coeff(0);
  if (u0.is_zero())
    throw std::domain_error("inverting a q-series with zero constant term");
  QSeries<Rational> r(s.trunc());
  const Rational v0 = Rational(1) / u0;
  r.set_coeff(0, v0);
  for (int n = 1; n <= s.trunc(); ++n) {
    Rational acc;
    for (int j = 1; j <= n; ++j) {
      const Rational uj = s.coeff(j);
      if (uj.is_zero()) continue;
      acc += uj * r.coeff(n - j);
    }
    if (!acc.is_zero()) r.set_coeff(n, -(acc / u0));
  }
  return r;
}

}  // namespace conifold
