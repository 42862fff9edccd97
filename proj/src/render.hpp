// SPDX-License-Identifier: Apache-2.0

#ifndef CONIFOLD_RENDER_HPP
#define CONIFOLD_RENDER_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "checker.hpp"
#include "gv.hpp"

namespace conifold {

using ordered_json = nlohmann::ordered_json;

// Human-readable single-line forms: "lambda^-2 + 1/12 + 1/240*lambda^2",
// "q + 1/8*q^2 + ...".  The zero series renders as "0".
std::string render_lambda_series(const LambdaSeries& s,
                                 const std::string& var = "lambda");
std::string render_qseries(const QSeries<Rational>& s,
                           const std::string& var = "q");

// JSON forms map exponent/degree (as decimal string keys, ascending) to
// exact rationals rendered "p/q" or "p".
ordered_json lambda_series_json(const LambdaSeries& s);
ordered_json qseries_json(const QSeries<Rational>& s);

// Potential: one row per q-degree.
std::string render_potential_text(const PotentialSeries& p);
ordered_json potential_json(const PotentialSeries& p);

// Check reports.
std::string render_report_text(const CheckReport& r);
ordered_json report_json(const CheckReport& r);

// Multi-class resummation, keyed by label, then degree, then exponent.
std::string render_multiclass_text(const MultiClassSeries& m);
ordered_json multiclass_json(const MultiClassSeries& m);

// Solved recursion output, keyed by genus.
std::string render_genus_map_text(const std::map<int, QSeries<Rational>>& m);
ordered_json genus_map_json(const std::map<int, QSeries<Rational>>& m);

}  // namespace conifold

#endif  // CONIFOLD_RENDER_HPP
