// SPDX-License-Identifier: Apache-2.0

#include "gv.hpp"

#include <set>
#include <stdexcept>

#include <json.hpp>

#include "sequences.hpp"

namespace conifold {

const GVClass* GVDataset::find(const std::string& label) const {
  for (const auto& c : classes) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

GVDataset load_gv_dataset(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("dataset parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("classes") || !j["classes"].is_array())
    throw std::runtime_error(
        "dataset must be an object with a \"classes\" array");
  GVDataset d;
  std::set<std::string> seen;
  for (const auto& entry : j["classes"]) {
    if (!entry.is_object() || !entry.contains("label") ||
        !entry.contains("n0"))
      throw std::runtime_error(
          "each class needs \"label\" and \"n0\" fields");
    if (!entry["label"].is_string())
      throw std::runtime_error("class label must be a string");
    if (!entry["n0"].is_number_integer())
      throw std::runtime_error("n0 must be an integer");
    GVClass c;
    c.label = entry["label"].get<std::string>();
    c.n0 = entry["n0"].get<long long>();
    if (!seen.insert(c.label).second)
      throw std::runtime_error("duplicate label: " + c.label);
    d.classes.push_back(std::move(c));
  }
  return d;
}

MultiClassSeries resum_genus0(const GVDataset& data, int genus_cut,
                              int k_cut) {
  if (genus_cut < 1 || k_cut < 1)
    throw std::invalid_argument("resum_genus0 requires genus, k cuts >= 1");
  const int max_exp = 2 * genus_cut - 2;
  const LambdaSeries base = sin_expansion(max_exp);

  // Independent genus-by-genus assembly of the same coefficients, used to
  // cross-check the resummation route before anything is returned.
  const PotentialSeries assembled = potential(genus_cut, k_cut);

  MultiClassSeries m;
  m.genus_cut = genus_cut;
  m.k_cut = k_cut;
  for (const auto& cls : data.classes) {
    m.labels.push_back(cls.label);
    QSeries<LambdaSeries> series(k_cut);
    const Rational weight(static_cast<long>(cls.n0));
    for (int k = 1; k <= k_cut; ++k) {
      const LambdaSeries f_k =
          base.scaled_variable(Rational(k)) * Rational(1, k);
      if (f_k != assembled.per_degree.at(k))
        throw std::logic_error(
            "resummation and assembly disagree on a coefficient");
      if (!weight.is_zero()) series.set_coeff(k, f_k * weight);
    }
    m.per_class.emplace(cls.label, std::move(series));
  }
  return m;
}

CheckReport check_gv_corollary(const GVDataset& data, const std::string& alpha,
                               int genus_cut, int k_cut) {
  const GVClass* target = data.find(alpha);
  if (target == nullptr)
    throw std::invalid_argument("unknown class label: " + alpha);
  CheckReport report;
  report.check_name = "gv_difference_equation";
  report.trunc_lambda = 2 * genus_cut - 2;
  report.trunc_q = k_cut;

  const MultiClassSeries m = resum_genus0(data, genus_cut, k_cut);
  const int max_exp = 2 * genus_cut - 2;
  const QSeries<Rational> li3 = polylog_series(3, k_cut);

  for (const auto& cls : data.classes) {
    // The lambda-shift of alpha's variable scales degree k of class beta
    // by phase exponent k when beta == alpha and 0 otherwise; the same
    // exponent drives the derivative on the classical side.
    const long mult = cls.label == alpha ? 1 : 0;
    const QSeries<LambdaSeries>& series = m.per_class.at(cls.label);
    const Rational weight(static_cast<long>(cls.n0));
    for (int k = 1; k <= k_cut; ++k) {
      const LambdaSeries f_k = series.terms().count(k) > 0
                                   ? series.coeff(k)
                                   : LambdaSeries::zero(max_exp);
      // Right side: minus the second theta-derivative of the classical
      // genus-zero sum, restricted to this class and degree.
      const Rational shift_exp(k * mult);
      const Rational rhs =
          -(weight * shift_exp * shift_exp * li3.coeff(k));
      if (auto site =
              difference_degree_site(k, k * mult, f_k, rhs, genus_cut)) {
        site->label = cls.label;
        report.passed = false;
        report.first_failure = site;
        return report;
      }
    }
  }
  return report;
}

CheckReport check_gv_corollary_all(const GVDataset& data, int genus_cut,
                                   int k_cut) {
  CheckReport report;
  report.check_name = "gv_difference_equation";
  report.trunc_lambda = 2 * genus_cut - 2;
  report.trunc_q = k_cut;
  for (const auto& cls : data.classes) {
    report = check_gv_corollary(data, cls.label, genus_cut, k_cut);
    if (!report.passed) return report;
  }
  return report;
}

}  // namespace conifold
