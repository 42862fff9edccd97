// SPDX-License-Identifier: Apache-2.0

#include "render.hpp"

#include <sstream>

namespace conifold {

namespace {

// Appends "c*var^e" to os with sign-aware joining.
void append_term(std::ostringstream& os, bool& first, const Rational& c,
                 const std::string& var, int exp) {
  Rational mag = c;
  if (first) {
    if (c.sign() < 0) {
      os << "-";
      mag = -c;
    }
    first = false;
  } else {
    os << (c.sign() < 0 ? " - " : " + ");
    if (c.sign() < 0) mag = -c;
  }
  if (exp == 0) {
    os << mag.str();
    return;
  }
  if (!mag.is_one()) os << mag.str() << "*";
  os << var;
  if (exp != 1) os << "^" << exp;
}

}  // namespace

std::string render_lambda_series(const LambdaSeries& s,
                                 const std::string& var) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = s.min_exp(); e <= s.max_exp(); ++e) {
    const Rational c = s.coeff(e);
    if (c.is_zero()) continue;
    append_term(os, first, c, var, e);
  }
  return os.str();
}

std::string render_qseries(const QSeries<Rational>& s,
                           const std::string& var) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : s.terms()) {
    append_term(os, first, c, var, n);
  }
  return os.str();
}

ordered_json lambda_series_json(const LambdaSeries& s) {
  ordered_json j = ordered_json::object();
  for (int e = s.min_exp(); e <= s.max_exp(); ++e) {
    const Rational c = s.coeff(e);
    if (!c.is_zero()) j[std::to_string(e)] = c.str();
  }
  return j;
}

ordered_json qseries_json(const QSeries<Rational>& s) {
  ordered_json j = ordered_json::object();
  for (const auto& [n, c] : s.terms()) {
    j[std::to_string(n)] = c.str();
  }
  return j;
}

std::string render_potential_text(const PotentialSeries& p) {
  std::ostringstream os;
  os << "genus_cut " << p.genus_cut << ", q_cut " << p.q_cut << "\n";
  for (const auto& [n, f] : p.per_degree) {
    os << "q^" << n << ": " << render_lambda_series(f) << "\n";
  }
  return os.str();
}

ordered_json potential_json(const PotentialSeries& p) {
  ordered_json j;
  j["genus_cut"] = p.genus_cut;
  j["q_cut"] = p.q_cut;
  ordered_json coeffs = ordered_json::object();
  for (const auto& [n, f] : p.per_degree) {
    coeffs[std::to_string(n)] = lambda_series_json(f);
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

std::string render_report_text(const CheckReport& r) {
  std::ostringstream os;
  os << r.check_name << ": " << (r.passed ? "PASS" : "FAIL")
     << " (lambda order " << r.trunc_lambda << ", q order " << r.trunc_q
     << ")";
  if (r.first_failure) {
    const FailureSite& f = *r.first_failure;
    os << "\nfirst failure:";
    if (!f.label.empty()) os << " class " << f.label << ",";
    os << " q-degree " << f.q_degree << ", lambda exponent " << f.lambda_exp
       << ": expected " << f.expected.str() << ", got " << f.actual.str();
  }
  os << "\n";
  return os.str();
}

ordered_json report_json(const CheckReport& r) {
  ordered_json j;
  j["check"] = r.check_name;
  j["passed"] = r.passed;
  j["lambda_order"] = r.trunc_lambda;
  j["q_order"] = r.trunc_q;
  if (r.first_failure) {
    const FailureSite& f = *r.first_failure;
    ordered_json site;
    if (!f.label.empty()) site["class"] = f.label;
    site["q_degree"] = f.q_degree;
    site["lambda_exp"] = f.lambda_exp;
    site["expected"] = f.expected.str();
    site["actual"] = f.actual.str();
    j["first_failure"] = std::move(site);
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

std::string render_multiclass_text(const MultiClassSeries& m) {
  std::ostringstream os;
  os << "genus_cut " << m.genus_cut << ", k_cut " << m.k_cut << "\n";
  for (const auto& label : m.labels) {
    os << "class " << label << ":\n";
    const auto& series = m.per_class.at(label);
    if (series.is_zero()) {
      os << "  0\n";
      continue;
    }
    for (const auto& [k, f] : series.terms()) {
      os << "  q^" << k << ": " << render_lambda_series(f) << "\n";
    }
  }
  return os.str();
}

ordered_json multiclass_json(const MultiClassSeries& m) {
  ordered_json j;
  j["genus_cut"] = m.genus_cut;
  j["k_cut"] = m.k_cut;
  ordered_json classes = ordered_json::object();
  for (const auto& label : m.labels) {
    ordered_json per_k = ordered_json::object();
    for (const auto& [k, f] : m.per_class.at(label).terms()) {
      per_k[std::to_string(k)] = lambda_series_json(f);
    }
    classes[label] = std::move(per_k);
  }
  j["classes"] = std::move(classes);
  return j;
}

std::string render_genus_map_text(const std::map<int, QSeries<Rational>>& m) {
  std::ostringstream os;
  for (const auto& [g, s] : m) {
    os << "genus " << g << ": " << render_qseries(s) << "\n";
  }
  return os.str();
}

ordered_json genus_map_json(const std::map<int, QSeries<Rational>>& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [g, s] : m) {
    j[std::to_string(g)] = qseries_json(s);
  }
  return j;
}

}  // namespace conifold
