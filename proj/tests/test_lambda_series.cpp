// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lambda_series.hpp"
#include "sequences.hpp"

using conifold::central_difference_symbol;
using conifold::LambdaSeries;
using conifold::Rational;

namespace {

// Deterministic random series with order >= floor_exp and small entries.
LambdaSeries random_series(std::mt19937& rng, int floor_exp = -2,
                           bool force_unit_lead = false) {
  std::uniform_int_distribution<int> order_dist(floor_exp, 3);
  std::uniform_int_distribution<int> len_dist(1, 8);
  std::uniform_int_distribution<long> num_dist(-9, 9);
  std::uniform_int_distribution<long> den_dist(1, 9);
  const int lo = order_dist(rng);
  const int len = len_dist(rng);
  std::vector<Rational> c(static_cast<size_t>(len));
  for (auto& v : c) v = Rational(num_dist(rng), den_dist(rng));
  if (force_unit_lead || c[0].is_zero()) c[0] = Rational(1);
  return LambdaSeries(lo, std::move(c));
}

}  // namespace

TEST_CASE("factories and coefficient window") {
  const LambdaSeries z = LambdaSeries::zero(5);
  CHECK(z.is_zero());
  CHECK(z.max_exp() == 5);
  CHECK(z.coeff(5).is_zero());
  CHECK(z.coeff(-1).is_zero());
  CHECK_THROWS_AS(z.coeff(6), std::out_of_range);

  const LambdaSeries m = LambdaSeries::monomial(-2, Rational(3), 4);
  CHECK(m.min_exp() == -2);
  CHECK(m.coeff(-2) == Rational(3));
  CHECK(m.coeff(0).is_zero());
  CHECK_THROWS_AS(LambdaSeries::monomial(5, Rational(1), 4),
                  std::invalid_argument);

  const LambdaSeries t =
      LambdaSeries::from_terms({{-1, Rational(2)}, {3, Rational(-1, 2)}}, 6);
  CHECK(t.min_exp() == -1);
  CHECK(t.max_exp() == 6);
  CHECK(t.coeff(3) == Rational(-1, 2));
  CHECK_THROWS_AS(LambdaSeries::from_terms({{7, Rational(1)}}, 6),
                  std::invalid_argument);

  // Leading zeros are trimmed to canonical form.
  const LambdaSeries lead(
      -1, {Rational(), Rational(), Rational(5), Rational(1)});
  CHECK(lead.min_exp() == 1);
  CHECK(lead.max_exp() == 2);
}

TEST_CASE("pole floor is enforced") {
  CHECK_THROWS_AS(LambdaSeries(-3, {Rational(1)}), std::domain_error);
  CHECK_THROWS_AS(
      LambdaSeries::monomial(-2, Rational(1), 0).shifted(-1),
      std::domain_error);
  // A deep *zero* window is harmless.
  const LambdaSeries deep(-5, {Rational(), Rational(), Rational(),
                               Rational(7)});
  CHECK(deep.min_exp() == -2);
}

TEST_CASE("exp series multiplies to one with its reflection") {
  const LambdaSeries e = LambdaSeries::exp_series(12);
  for (int k = 0; k <= 12; ++k) {
    CHECK(e.coeff(k) ==
          Rational(mpz_class(1), conifold::factorial(static_cast<unsigned>(k))));
  }
  const LambdaSeries product = e * e.scaled_variable(Rational(-1));
  CHECK(product == LambdaSeries::one(product.max_exp()));
}

TEST_CASE("ring identities on random series") {
  std::mt19937 rng(20260817u);
  for (int trial = 0; trial < 200; ++trial) {
    // Only a may dip below order 0, so every product in the identities
    // (including the triple ones) stays at or above the x^-2 pole floor;
    // commutativity still exercises a negative order on either side.
    const LambdaSeries a = random_series(rng);
    const LambdaSeries b = random_series(rng, 0);
    const LambdaSeries c = random_series(rng, 0);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LambdaSeries::zero(a.max_exp()));
    CHECK(a * LambdaSeries::one(a.max_exp() - a.min_exp() + 2) == a);
  }
}

TEST_CASE("multiplication tracks the trustworthy window") {
  // ord 1 with 3 known coefficients times ord 0 with 2 known coefficients:
  // the unknown tail of the second factor meets x^1 at x^3.
  const LambdaSeries a(1, {Rational(1), Rational(1), Rational(1)});
  const LambdaSeries b(0, {Rational(1), Rational(1)});
  const LambdaSeries p = a * b;
  CHECK(p.min_exp() == 1);
  CHECK(p.max_exp() == 2);
  CHECK(p.coeff(1) == Rational(1));
  CHECK(p.coeff(2) == Rational(2));
}

TEST_CASE("inverse is exact through its guaranteed window") {
  std::mt19937 rng(987654321u);
  for (int trial = 0; trial < 200; ++trial) {
    const LambdaSeries a = random_series(rng, -2, true);
    if (-a.min_exp() < -2) continue;  // inverse pole would break the floor
    const LambdaSeries inv = a.inverse();
    CHECK(inv.min_exp() == -a.min_exp());
    const LambdaSeries p = a * inv;
    CHECK(p == LambdaSeries::one(p.max_exp()));
  }
  CHECK_THROWS_AS(LambdaSeries::zero(4).inverse(), std::domain_error);
}

TEST_CASE("scaling, shifting, truncating") {
  const LambdaSeries s =
      LambdaSeries::from_terms({{-2, Rational(1)}, {1, Rational(3)}}, 4);
  const LambdaSeries scaled = s.scaled_variable(Rational(2));
  CHECK(scaled.coeff(-2) == Rational(1, 4));
  CHECK(scaled.coeff(1) == Rational(6));
  CHECK_THROWS_AS(s.scaled_variable(Rational()), std::invalid_argument);

  const LambdaSeries shifted = s.shifted(2);
  CHECK(shifted.min_exp() == 0);
  CHECK(shifted.max_exp() == 6);
  CHECK(shifted.coeff(3) == Rational(3));

  const LambdaSeries cut = s.truncated(0);
  CHECK(cut.max_exp() == 0);
  CHECK(cut.coeff(-2) == Rational(1));
  CHECK(cut.truncated(5).max_exp() == 0);  // truncation never extends
}

TEST_CASE("equality compares up to the common truncation") {
  const LambdaSeries a(0, {Rational(1), Rational(2)});       // through x^1
  const LambdaSeries b(0, {Rational(1), Rational(2), Rational(9)});
  CHECK(a == b);  // x^2 lies beyond a's window
  const LambdaSeries c(0, {Rational(1), Rational(3)});
  CHECK(a != c);
  CHECK(LambdaSeries::zero(3) == LambdaSeries::zero(10));
}

TEST_CASE("central difference symbol") {
  const LambdaSeries d1 = central_difference_symbol(1, 6);
  CHECK(d1.coeff(2) == Rational(-1));
  CHECK(d1.coeff(3).is_zero());
  CHECK(d1.coeff(4) == Rational(1, 12));
  CHECK(d1.coeff(6) == Rational(-1, 360));

  // 2 cos(n lambda) - 2 is 2 cos(lambda) - 2 with lambda scaled by n.
  for (long n = 2; n <= 5; ++n) {
    CHECK(central_difference_symbol(n, 10) ==
          central_difference_symbol(1, 10).scaled_variable(Rational(n)));
  }
  CHECK(central_difference_symbol(0, 8).is_zero());
  CHECK_THROWS_AS(central_difference_symbol(-1, 8), std::invalid_argument);
}
