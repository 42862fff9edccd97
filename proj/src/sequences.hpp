// SPDX-License-Identifier: Apache-2.0

#ifndef CONIFOLD_SEQUENCES_HPP
#define CONIFOLD_SEQUENCES_HPP

#include "rational.hpp"

namespace conifold {

// n!, memoized.
mpz_class factorial(unsigned n);

// Binomial coefficient C(n, k); 0 for k > n.
mpz_class binomial(unsigned n, unsigned k);

// Bernoulli number B_n under the convention w/(e^w - 1) = sum B_n w^n / n!,
// so B_1 = -1/2.  Memoized; total on n >= 0.
Rational bernoulli(unsigned n);

// Eulerian number A(n, k): permutations of {1..n} with exactly k descents,
// via the triangular recurrence.  Requires n >= 1 and 0 <= k < n.
mpz_class eulerian(unsigned n, unsigned k);

// Genus coefficient c_g = (-1)^(g-1) B_{2g} / (2g (2g-2)!) for g >= 1.
// The genus-zero coefficient is the constant 1 and is handled by callers;
// g = 0 is rejected.
Rational gw_genus_coeff(unsigned g);

// Universal degree-zero contribution at genus g >= 2 for a threefold of
// Euler characteristic chi:
//   chi * (-1)^(g-1) B_{2g} B_{2g-2} / (4g (2g-2) (2g-2)!).
// Genus 0 and 1 have no universal form and are rejected.
Rational constant_map_coeff(unsigned g, long euler_char);

}  // namespace conifold

#endif  // CONIFOLD_SEQUENCES_HPP
