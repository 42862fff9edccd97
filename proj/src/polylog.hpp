// SPDX-License-Identifier: Apache-2.0

#ifndef CONIFOLD_POLYLOG_HPP
#define CONIFOLD_POLYLOG_HPP

#include "qseries.hpp"
#include "ratfunc.hpp"

namespace conifold {

// Truncated series sum_{n=1}^{trunc} n^{-s} q^n for any integer weight s.
QSeries<Rational> polylog_series(long s, int trunc);

// Closed form of the weight -m polylogarithm (m >= 0) as a rational
// function of q, obtained by applying q d/dq to q/(1-q) m times.
RatFunc polylog_negative_closed(unsigned m);

// The same function assembled from the degree-m Eulerian polynomial:
// q * A_m(q) / (1-q)^(m+1).  Independent of the derivative route above.
RatFunc polylog_negative_eulerian(unsigned m);

}  // namespace conifold

#endif  // CONIFOLD_POLYLOG_HPP
