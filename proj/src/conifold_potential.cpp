// SPDX-License-Identifier: Apache-2.0

#include "conifold_potential.hpp"

#include <stdexcept>

#include "sequences.hpp"

namespace conifold {

QSeries<Rational> free_energy_genus(unsigned g, int trunc) {
  if (g == 0) return polylog_series(3, trunc);
  const long weight = 3 - 2 * static_cast<long>(g);
  return polylog_series(weight, trunc) * gw_genus_coeff(g);
}

PotentialSeries potential(int genus_cut, int q_cut) {
  if (genus_cut < 0 || q_cut < 1)
    throw std::invalid_argument("potential requires genus_cut >= 0, q_cut >= 1");
  PotentialSeries p;
  p.genus_cut = genus_cut;
  p.q_cut = q_cut;
  std::vector<Rational> cg(static_cast<size_t>(genus_cut) + 1);
  cg[0] = Rational(1);
  for (int g = 1; g <= genus_cut; ++g)
    cg[static_cast<size_t>(g)] = gw_genus_coeff(static_cast<unsigned>(g));
  const int max_exp = 2 * genus_cut - 2;
  for (long n = 1; n <= q_cut; ++n) {
    std::map<int, Rational> terms;
    const Rational nr(n);
    // n^(2g-3) built incrementally from n^(-3).
    Rational npow = nr.pow(-3);
    const Rational n2 = nr * nr;
    for (int g = 0; g <= genus_cut; ++g) {
      terms[2 * g - 2] = cg[static_cast<size_t>(g)] * npow;
      npow *= n2;
    }
    p.per_degree.emplace(n, LambdaSeries::from_terms(terms, max_exp));
  }
  return p;
}

LambdaSeries sin_expansion(int max_exp) {
  if (max_exp < -2) throw std::invalid_argument("max_exp below -2");
  // Taylor series of 2 sin(lambda/2), carried far enough that the inverse
  // of its square is valid through max_exp.
  const int sine_max = max_exp + 5;
  std::map<int, Rational> terms;
  mpz_class four_pow_k(1);
  for (int e = 1; e <= sine_max; e += 2) {
    const unsigned k = static_cast<unsigned>((e - 1) / 2);
    const mpz_class den = four_pow_k * factorial(static_cast<unsigned>(e));
    terms[e] = Rational(k % 2 == 0 ? mpz_class(1) : mpz_class(-1), den);
    four_pow_k *= 4;
  }
  const LambdaSeries s = LambdaSeries::from_terms(terms, sine_max);
  return (s * s).inverse().truncated(max_exp);
}

LambdaSeries coefficient_closed_form(long n, int genus_cut) {
  if (n < 1) throw std::invalid_argument("q-degree must be positive");
  const int max_exp = 2 * genus_cut - 2;
  const LambdaSeries base = sin_expansion(max_exp);
  return base.scaled_variable(Rational(n)) * Rational(1, n);
}

}  // namespace conifold
