// SPDX-License-Identifier: Apache-2.0

#ifndef CONIFOLD_POTENTIAL_HPP
#define CONIFOLD_POTENTIAL_HPP

#include <map>

#include "lambda_series.hpp"
#include "polylog.hpp"
#include "qseries.hpp"

namespace conifold {

// Genus-g free energy of the resolved conifold as a q-series:
// genus 0 is Li_3(q); genus g >= 1 is gw_genus_coeff(g) * Li_{3-2g}(q).
QSeries<Rational> free_energy_genus(unsigned g, int trunc);

// The all-genus potential collected by q-degree: the coefficient of q^n is
// the Laurent polynomial f_n(lambda) = sum_g gw_genus_coeff(g) n^(2g-3)
// lambda^(2g-2), with the genus-0 coefficient taken as 1.  Genera 0..genus_cut
// contribute, so each f_n lives in the window [-2, 2*genus_cut - 2].
struct PotentialSeries {
  int genus_cut = 0;
  int q_cut = 0;
  std::map<long, LambdaSeries> per_degree;
};

PotentialSeries potential(int genus_cut, int q_cut);

// Laurent expansion of 1 / (2 sin(lambda/2))^2 through lambda^max_exp,
// computed directly from the sine Taylor series (square, then invert).
// Its lambda^(2g-2) coefficient reproduces gw_genus_coeff(g).
LambdaSeries sin_expansion(int max_exp);

// f_n(lambda) obtained by resummation instead of genus-by-genus assembly:
// (1/n) * sin_expansion with lambda scaled to n*lambda, truncated to the
// window of a genus_cut assembly.
LambdaSeries coefficient_closed_form(long n, int genus_cut);

}  // namespace conifold

#endif  // CONIFOLD_POTENTIAL_HPP
