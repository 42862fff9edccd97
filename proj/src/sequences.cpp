// SPDX-License-Identifier: Apache-2.0

#include "sequences.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace conifold {

namespace {

std::mutex cache_mutex;

}  // namespace

mpz_class factorial(unsigned n) {
  static std::vector<mpz_class> table = {mpz_class(1)};
  std::lock_guard<std::mutex> lock(cache_mutex);
  while (table.size() <= n) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[n];
}

mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return mpz_class(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational bernoulli(unsigned n) {
  // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1, solved for B_n.
  static std::vector<Rational> table = {Rational(1)};
  std::lock_guard<std::mutex> lock(cache_mutex);
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    Rational acc;
    for (unsigned k = 0; k < m; ++k) {
      acc += Rational(binomial(m + 1, k), mpz_class(1)) * table[k];
    }
    table.push_back(-acc / Rational(mpz_class(m + 1), mpz_class(1)));
  }
  return table[n];
}

mpz_class eulerian(unsigned n, unsigned k) {
  if (n < 1 || k >= n)
    throw std::invalid_argument("eulerian(n, k) requires 0 <= k < n");
  // Rows built up-front; row n has entries k = 0..n-1.
  static std::vector<std::vector<mpz_class>> rows = {{}, {mpz_class(1)}};
  std::lock_guard<std::mutex> lock(cache_mutex);
  while (rows.size() <= n) {
    const unsigned m = static_cast<unsigned>(rows.size());
    const auto& prev = rows[m - 1];
    std::vector<mpz_class> row(m);
    for (unsigned j = 0; j < m; ++j) {
      mpz_class v = 0;
      if (j < prev.size()) v += (j + 1) * prev[j];
      if (j >= 1) v += (m - j) * prev[j - 1];
      row[j] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

Rational gw_genus_coeff(unsigned g) {
  if (g < 1)
    throw std::invalid_argument(
        "gw_genus_coeff requires g >= 1; the genus-zero coefficient is 1");
  const int sign = (g % 2 == 1) ? 1 : -1;
  const Rational denom(mpz_class(2 * g) * factorial(2 * g - 2), mpz_class(1));
  return Rational(sign) * bernoulli(2 * g) / denom;
}

Rational constant_map_coeff(unsigned g, long euler_char) {
  if (g < 2)
    throw std::invalid_argument(
        "constant_map_coeff is universal only for g >= 2");
  const int sign = (g % 2 == 1) ? 1 : -1;
  const Rational numer = Rational(euler_char) * Rational(sign) *
                         bernoulli(2 * g) * bernoulli(2 * g - 2);
  const Rational denom(mpz_class(4 * g) * mpz_class(2 * g - 2) *
                           factorial(2 * g - 2),
                       mpz_class(1));
  return numer / denom;
}

}  // namespace conifold
