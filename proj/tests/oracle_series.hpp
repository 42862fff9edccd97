// SPDX-License-Identifier: Apache-2.0

// Self-contained reference computations for the tests.  Everything here is
// written against plain dense vectors and brute-force counting so that the
// values frozen into the tests do not share a code path with the library
// implementations they certify.

#ifndef CONIFOLD_TESTS_ORACLE_SERIES_HPP
#define CONIFOLD_TESTS_ORACLE_SERIES_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace oracle {

using conifold::Rational;

// c[k] is the coefficient of x^k; all vectors are truncations to the same
// nominal order, and operations keep the shorter length.
using Series = std::vector<Rational>;

inline Series mul(const Series& a, const Series& b) {
  const size_t n = std::min(a.size(), b.size());
  Series r(n);
  for (size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; i + j < n; ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

inline Series invert(const Series& a) {
  if (a.empty() || a[0].is_zero())
    throw std::invalid_argument("oracle invert needs a unit constant term");
  Series r(a.size());
  r[0] = Rational(1) / a[0];
  for (size_t n = 1; n < a.size(); ++n) {
    Rational acc;
    for (size_t j = 1; j <= n; ++j) acc += a[j] * r[n - j];
    r[n] = -(acc / a[0]);
  }
  return r;
}

// Pascal's triangle: rows 0..n inclusive of exact binomials.
inline std::vector<std::vector<Rational>> pascal(size_t n) {
  std::vector<std::vector<Rational>> t(n + 1);
  for (size_t i = 0; i <= n; ++i) {
    t[i].assign(i + 1, Rational(1));
    for (size_t j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t;
}

inline Rational factorial(size_t n) {
  Rational r(1);
  for (size_t k = 2; k <= n; ++k) r *= Rational(static_cast<long>(k));
  return r;
}

// Bernoulli numbers (B_1 = -1/2) by inverting (e^w - 1)/w: the inverse is
// sum_n B_n w^n / n!.
inline Series bernoulli_by_inversion(size_t count) {
  Series a(count + 1);
  for (size_t k = 0; k <= count; ++k) a[k] = Rational(1) / factorial(k + 1);
  Series inv = invert(a);
  Series b(count + 1);
  for (size_t n = 0; n <= count; ++n) b[n] = inv[n] * factorial(n);
  return b;
}

// Bernoulli numbers a second way: the recurrence
// sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1, seeded with B_0 = 1.
inline Series bernoulli_by_recurrence(size_t count) {
  const auto tri = pascal(count + 1);
  Series b(count + 1);
  b[0] = Rational(1);
  for (size_t n = 1; n <= count; ++n) {
    Rational acc;
    for (size_t k = 0; k < n; ++k) acc += tri[n + 1][k] * b[k];
    b[n] = -(acc / tri[n + 1][n]);
  }
  return b;
}

// Number of permutations of {1..n} with exactly k descents, counted one
// permutation at a time.  Practical through n = 9.
inline long descent_count(unsigned n, unsigned k) {
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 1u);
  long count = 0;
  do {
    unsigned descents = 0;
    for (unsigned i = 0; i + 1 < n; ++i) {
      if (p[i] > p[i + 1]) ++descents;
    }
    if (descents == k) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Coefficients of the Laurent expansion of 1/(2 sin(lambda/2))^2, indexed
// so that entry g is the coefficient of lambda^(2g-2): write
// 2 sin(lambda/2) = lambda * v(lambda^2) and invert v^2 as a power series
// in x = lambda^2.
inline Series sin_inverse_square(size_t genus_count) {
  Series v(genus_count + 1);
  Rational four_pow(1);
  for (size_t k = 0; k <= genus_count; ++k) {
    const Rational mag = Rational(1) / (four_pow * factorial(2 * k + 1));
    v[k] = (k % 2 == 0) ? mag : -mag;
    four_pow *= Rational(4);
  }
  return invert(mul(v, v));
}

}  // namespace oracle

#endif  // CONIFOLD_TESTS_ORACLE_SERIES_HPP
