// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "checker.hpp"
#include "oracle_series.hpp"
#include "sequences.hpp"

using conifold::CheckReport;
using conifold::LambdaSeries;
using conifold::PotentialSeries;
using conifold::Rational;

namespace {

// Shifts the effective genus-g coefficient by delta: every degree n picks
// up delta * n^(2g-3) at lambda^(2g-2).
PotentialSeries corrupt_genus(PotentialSeries p, int g, const Rational& delta) {
  for (auto& [n, f] : p.per_degree) {
    std::map<int, Rational> terms;
    for (int e = f.min_exp(); e <= f.max_exp(); ++e) {
      const Rational c = f.coeff(e);
      if (!c.is_zero()) terms[e] = c;
    }
    terms[2 * g - 2] += delta * Rational(n).pow(2 * g - 3);
    f = LambdaSeries::from_terms(terms, f.max_exp());
  }
  return p;
}

}  // namespace

TEST_CASE("generating identity holds through w^40") {
  const CheckReport r = conifold::check_generating_identity(40);
  CHECK(r.passed);
  CHECK(r.check_name == "generating_identity");
  CHECK(!r.first_failure.has_value());
  CHECK_THROWS_AS(conifold::check_generating_identity(1),
                  std::invalid_argument);
}

TEST_CASE("difference equation holds for the assembled potential") {
  const CheckReport r = conifold::check_theorem(6, 20);
  CHECK(r.passed);
  CHECK(r.trunc_lambda == 10);
  CHECK(r.trunc_q == 20);

  // Hand example at degree 2: the product collapses to the single constant
  // -1/2 through lambda^(2 genus_cut).
  const auto p = conifold::potential(3, 5);
  const LambdaSeries product =
      conifold::central_difference_symbol(2, 8) * p.per_degree.at(2);
  CHECK(product.coeff(0) == Rational(-1, 2));
  for (int e = 1; e <= product.max_exp(); ++e) {
    CHECK(product.coeff(e).is_zero());
  }
}

TEST_CASE("a corrupted genus coefficient is located exactly") {
  const Rational delta(1, 1000);
  const int g = 2;
  const auto bad = corrupt_genus(conifold::potential(5, 8), g, delta);
  const CheckReport r = conifold::check_theorem(bad);
  CHECK(!r.passed);
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->q_degree == 1);
  CHECK(r.first_failure->lambda_exp == 2 * g - 2);

  // Every degree fails at the same lambda-exponent, with the residual
  // scaling as delta * n^(2g-3).
  for (long n = 1; n <= 8; ++n) {
    const auto site =
        conifold::check_theorem_degree(n, bad.per_degree.at(n), 5);
    REQUIRE(site.has_value());
    CHECK(site->q_degree == n);
    CHECK(site->lambda_exp == 2 * g - 2);
    CHECK(site->actual - site->expected == delta * Rational(n).pow(2 * g - 3));
    // The expected value is the true coefficient.
    CHECK(site->expected ==
          conifold::gw_genus_coeff(g) * Rational(n).pow(2 * g - 3));
  }
}

TEST_CASE("a single corrupted coefficient is located exactly") {
  auto p = conifold::potential(4, 6);
  std::map<int, Rational> terms;
  const LambdaSeries& f5 = p.per_degree.at(5);
  for (int e = f5.min_exp(); e <= f5.max_exp(); ++e) {
    if (!f5.coeff(e).is_zero()) terms[e] = f5.coeff(e);
  }
  terms[0] += Rational(7, 100);
  p.per_degree.at(5) = LambdaSeries::from_terms(terms, f5.max_exp());

  const CheckReport r = conifold::check_theorem(p);
  CHECK(!r.passed);
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->q_degree == 5);
  CHECK(r.first_failure->lambda_exp == 0);
  CHECK(r.first_failure->actual - r.first_failure->expected ==
        Rational(7, 100));
  // Other degrees stay clean.
  CHECK(!conifold::check_theorem_degree(1, p.per_degree.at(1), 4));
  CHECK(!conifold::check_theorem_degree(6, p.per_degree.at(6), 4));
}

TEST_CASE("a missing degree reports the true coefficient as expected") {
  PotentialSeries p = conifold::potential(3, 2);
  p.per_degree.erase(1);
  const CheckReport r = conifold::check_theorem(p);
  CHECK(!r.passed);
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->q_degree == 1);
  CHECK(r.first_failure->lambda_exp == -2);
  CHECK(r.first_failure->expected == Rational(1));
  CHECK(r.first_failure->actual.is_zero());
}

TEST_CASE("genus recursion holds and matches the scalar reduction") {
  for (int g = 1; g <= 8; ++g) {
    const CheckReport r = conifold::check_recursion(g, 20);
    CHECK(r.passed);
  }
  CHECK_THROWS_AS(conifold::check_recursion(0, 10), std::invalid_argument);

  // Independent scalar route with oracle inputs only.
  const auto ladder = oracle::sin_inverse_square(10);
  for (int g = 1; g <= 10; ++g) {
    Rational sum;
    for (int k = 0; k <= g; ++k) {
      Rational term = ladder[static_cast<size_t>(k)] /
                      oracle::factorial(static_cast<size_t>(2 * g - 2 * k + 2));
      if ((g - k + 1) % 2 != 0) term = -term;
      sum += term;
    }
    CHECK(sum.is_zero());
  }
}

TEST_CASE("recursion reconstructs every genus from genus zero") {
  const auto solved = conifold::solve_recursion(4, 15);
  CHECK(solved.size() == 4);
  for (int g = 1; g <= 4; ++g) {
    CHECK(solved.at(g) ==
          conifold::free_energy_genus(static_cast<unsigned>(g), 15));
  }
  CHECK_THROWS_AS(conifold::solve_recursion(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(conifold::solve_recursion(3, 0), std::invalid_argument);
}
