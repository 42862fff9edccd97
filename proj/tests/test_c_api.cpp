// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "conifold/conifold.h"
#include "conifold_potential.hpp"
#include "rational.hpp"

namespace {

std::string take(char* raw) {
  REQUIRE(raw != nullptr);
  std::string s(raw);
  conifold_string_free(raw);
  return s;
}

}  // namespace

TEST_CASE("version and error text are always available") {
  CHECK(std::strlen(conifold_version()) > 0);
  CHECK(conifold_last_error() != nullptr);
}

TEST_CASE("scalar entry points") {
  char* out = nullptr;
  REQUIRE(conifold_bernoulli(12, &out) == CONIFOLD_OK);
  CHECK(take(out) == "-691/2730");

  REQUIRE(conifold_genus_coefficient(2, &out) == CONIFOLD_OK);
  CHECK(take(out) == "1/240");

  REQUIRE(conifold_constant_map_coefficient(2, 2, &out) == CONIFOLD_OK);
  CHECK(take(out) == "1/2880");

  CHECK(conifold_genus_coefficient(0, &out) ==
        CONIFOLD_ERROR_INVALID_ARGUMENT);
  CHECK(std::strlen(conifold_last_error()) > 0);
  CHECK(conifold_bernoulli(4, nullptr) == CONIFOLD_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("series entry points emit exact JSON") {
  char* out = nullptr;
  REQUIRE(conifold_polylog(3, 4, CONIFOLD_FORMAT_JSON, &out) == CONIFOLD_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["order"] == 3);
  CHECK(j["series"]["2"] == "1/8");

  REQUIRE(conifold_potential(2, 2, CONIFOLD_FORMAT_JSON, &out) ==
          CONIFOLD_OK);
  const auto p = nlohmann::json::parse(take(out));
  CHECK(p["genus_cut"] == 2);
  CHECK(p["coeffs"]["1"]["-2"] == "1");
  CHECK(p["coeffs"]["1"]["0"] == "1/12");
  CHECK(p["coeffs"]["2"]["2"] == "1/120");

  REQUIRE(conifold_sin_expansion(4, CONIFOLD_FORMAT_TEXT, &out) ==
          CONIFOLD_OK);
  CHECK(take(out) ==
        "lambda^-2 + 1/12 + 1/240*lambda^2 + 1/6048*lambda^4\n");

  REQUIRE(conifold_solve_recursion(2, 3, CONIFOLD_FORMAT_JSON, &out) ==
          CONIFOLD_OK);
  const auto s = nlohmann::json::parse(take(out));
  CHECK(s["genus"]["1"]["3"] == "1/36");

  CHECK(conifold_polylog(3, 0, CONIFOLD_FORMAT_TEXT, &out) ==
        CONIFOLD_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("JSON rationals round-trip exactly") {
  char* out = nullptr;
  REQUIRE(conifold_potential(4, 6, CONIFOLD_FORMAT_JSON, &out) ==
          CONIFOLD_OK);
  const auto j = nlohmann::json::parse(take(out));
  const auto p = conifold::potential(4, 6);
  for (const auto& [degree, row] : j["coeffs"].items()) {
    const auto& f = p.per_degree.at(std::stol(degree));
    for (const auto& [exp, value] : row.items()) {
      const auto parsed =
          conifold::Rational::from_string(value.get<std::string>());
      CHECK(parsed == f.coeff(std::stoi(exp)));
    }
  }
}

TEST_CASE("report lifecycle") {
  conifold_report* report = nullptr;
  REQUIRE(conifold_check_theorem(4, 8, &report) == CONIFOLD_OK);
  CHECK(conifold_report_passed(report) == 1);
  char* out = nullptr;
  REQUIRE(conifold_report_render(report, CONIFOLD_FORMAT_JSON, &out) ==
          CONIFOLD_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["check"] == "difference_equation");
  CHECK(j["passed"] == true);
  CHECK(j["lambda_order"] == 6);
  CHECK(j["q_order"] == 8);
  CHECK(j["first_failure"].is_null());
  conifold_report_free(report);

  REQUIRE(conifold_check_identity(30, &report) == CONIFOLD_OK);
  CHECK(conifold_report_passed(report) == 1);
  conifold_report_free(report);

  REQUIRE(conifold_check_recursion(3, 10, &report) == CONIFOLD_OK);
  CHECK(conifold_report_passed(report) == 1);
  conifold_report_free(report);

  CHECK(conifold_check_recursion(0, 10, &report) ==
        CONIFOLD_ERROR_INVALID_ARGUMENT);
  CHECK(conifold_report_passed(nullptr) == 0);
}

TEST_CASE("gv dataset lifecycle and statuses") {
  conifold_gv_dataset* d = nullptr;
  CHECK(conifold_gv_dataset_parse("{bad", &d) == CONIFOLD_ERROR_PARSE);
  CHECK(conifold_gv_dataset_parse(
            R"({"classes":[{"label":"a","n0":1},{"label":"a","n0":2}]})",
            &d) == CONIFOLD_ERROR_PARSE);

  REQUIRE(conifold_gv_dataset_parse(
              R"({"classes":[{"label":"a","n0":3},{"label":"b","n0":-2}]})",
              &d) == CONIFOLD_OK);
  char* out = nullptr;
  REQUIRE(conifold_gv_resum(d, 2, 3, CONIFOLD_FORMAT_JSON, &out) ==
          CONIFOLD_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["classes"]["a"]["1"]["-2"] == "3");
  CHECK(j["classes"]["b"]["1"]["-2"] == "-2");

  conifold_report* report = nullptr;
  REQUIRE(conifold_gv_check(d, "a", 3, 6, &report) == CONIFOLD_OK);
  CHECK(conifold_report_passed(report) == 1);
  conifold_report_free(report);
  REQUIRE(conifold_gv_check(d, nullptr, 3, 6, &report) == CONIFOLD_OK);
  CHECK(conifold_report_passed(report) == 1);
  conifold_report_free(report);
  CHECK(conifold_gv_check(d, "nope", 3, 6, &report) ==
        CONIFOLD_ERROR_INVALID_ARGUMENT);
  conifold_gv_dataset_free(d);
}
