// SPDX-License-Identifier: Apache-2.0

#include "conifold/conifold.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "checker.hpp"
#include "gv.hpp"
#include "render.hpp"
#include "sequences.hpp"

extern "C" {
struct conifold_report {
  conifold::CheckReport report;
};
struct conifold_gv_dataset {
  conifold::GVDataset data;
};
}

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into statuses and recording the message.
template <typename Fn>
conifold_status guard(Fn&& fn) {
  try {
    fn();
    return CONIFOLD_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return CONIFOLD_ERROR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return CONIFOLD_ERROR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return CONIFOLD_ERROR_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    return CONIFOLD_ERROR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CONIFOLD_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CONIFOLD_ERROR_INTERNAL;
  }
}

conifold_status require(bool ok, const char* message) {
  if (ok) return CONIFOLD_OK;
  g_last_error = message;
  return CONIFOLD_ERROR_INVALID_ARGUMENT;
}

std::string render_json_or(const std::string& text,
                           const conifold::ordered_json& json,
                           conifold_format format) {
  if (format == CONIFOLD_FORMAT_JSON) return json.dump(2) + "\n";
  return text;
}

conifold_status make_report(conifold::CheckReport r, conifold_report** out) {
  *out = new conifold_report{std::move(r)};
  return CONIFOLD_OK;
}

}  // namespace

extern "C" {

const char* conifold_version(void) { return "0.1.0"; }

const char* conifold_last_error(void) { return g_last_error.c_str(); }

void conifold_string_free(char* s) { std::free(s); }

conifold_status conifold_bernoulli(unsigned n, char** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  return guard([&] { *out = dup_string(conifold::bernoulli(n).str()); });
}

conifold_status conifold_genus_coefficient(unsigned g, char** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  return guard([&] { *out = dup_string(conifold::gw_genus_coeff(g).str()); });
}

conifold_status conifold_constant_map_coefficient(unsigned g,
                                                  long euler_characteristic,
                                                  char** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  return guard([&] {
    *out = dup_string(
        conifold::constant_map_coeff(g, euler_characteristic).str());
  });
}

conifold_status conifold_polylog(long order, int q_cut,
                                 conifold_format format, char** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  if (auto st = require(q_cut >= 1, "q_cut must be >= 1")) return st;
  return guard([&] {
    const auto series = conifold::polylog_series(order, q_cut);
    conifold::ordered_json j;
    j["order"] = order;
    j["q_cut"] = q_cut;
    j["series"] = conifold::qseries_json(series);
    *out = dup_string(render_json_or(
        conifold::render_qseries(series) + "\n", j, format));
  });
}

conifold_status conifold_potential(int genus_cut, int q_cut,
                                   conifold_format format, char** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  return guard([&] {
    const auto p = conifold::potential(genus_cut, q_cut);
    *out = dup_string(render_json_or(conifold::render_potential_text(p),
                                     conifold::potential_json(p), format));
  });
}

conifold_status conifold_sin_expansion(int max_exponent,
                                       conifold_format format, char** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  return guard([&] {
    const auto s = conifold::sin_expansion(max_exponent);
    conifold::ordered_json j;
    j["max_exp"] = max_exponent;
    j["series"] = conifold::lambda_series_json(s);
    *out = dup_string(render_json_or(
        conifold::render_lambda_series(s) + "\n", j, format));
  });
}

conifold_status conifold_solve_recursion(int genus_cut, int q_cut,
                                         conifold_format format, char** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  return guard([&] {
    const auto solved = conifold::solve_recursion(genus_cut, q_cut);
    conifold::ordered_json j;
    j["genus_cut"] = genus_cut;
    j["q_cut"] = q_cut;
    j["genus"] = conifold::genus_map_json(solved);
    *out = dup_string(render_json_or(
        conifold::render_genus_map_text(solved), j, format));
  });
}

conifold_status conifold_check_identity(int truncation,
                                        conifold_report** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  return guard([&] {
    make_report(conifold::check_generating_identity(truncation), out);
  });
}

conifold_status conifold_check_theorem(int genus_cut, int q_cut,
                                       conifold_report** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  return guard(
      [&] { make_report(conifold::check_theorem(genus_cut, q_cut), out); });
}

conifold_status conifold_check_recursion(int genus, int q_cut,
                                         conifold_report** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  return guard(
      [&] { make_report(conifold::check_recursion(genus, q_cut), out); });
}

int conifold_report_passed(const conifold_report* report) {
  return report != nullptr && report->report.passed ? 1 : 0;
}

conifold_status conifold_report_render(const conifold_report* report,
                                       conifold_format format, char** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  if (auto st = require(report != nullptr, "report is NULL")) return st;
  return guard([&] {
    *out = dup_string(
        render_json_or(conifold::render_report_text(report->report),
                       conifold::report_json(report->report), format));
  });
}

void conifold_report_free(conifold_report* report) { delete report; }

conifold_status conifold_gv_dataset_parse(const char* json_text,
                                          conifold_gv_dataset** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  if (auto st = require(json_text != nullptr, "json_text is NULL")) return st;
  return guard([&] {
    *out = new conifold_gv_dataset{conifold::load_gv_dataset(json_text)};
  });
}

void conifold_gv_dataset_free(conifold_gv_dataset* dataset) {
  delete dataset;
}

conifold_status conifold_gv_resum(const conifold_gv_dataset* dataset,
                                  int genus_cut, int k_cut,
                                  conifold_format format, char** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  if (auto st = require(dataset != nullptr, "dataset is NULL")) return st;
  return guard([&] {
    const auto m = conifold::resum_genus0(dataset->data, genus_cut, k_cut);
    *out = dup_string(render_json_or(conifold::render_multiclass_text(m),
                                     conifold::multiclass_json(m), format));
  });
}

conifold_status conifold_gv_check(const conifold_gv_dataset* dataset,
                                  const char* alpha, int genus_cut, int k_cut,
                                  conifold_report** out) {
  if (auto st = require(out != nullptr, "out is NULL")) return st;
  if (auto st = require(dataset != nullptr, "dataset is NULL")) return st;
  return guard([&] {
    conifold::CheckReport r =
        alpha == nullptr
            ? conifold::check_gv_corollary_all(dataset->data, genus_cut,
                                               k_cut)
            : conifold::check_gv_corollary(dataset->data, alpha, genus_cut,
                                           k_cut);
    make_report(std::move(r), out);
  });
}

}  // extern "C"
