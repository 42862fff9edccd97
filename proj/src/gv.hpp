// SPDX-License-Identifier: Apache-2.0

#ifndef CONIFOLD_GV_HPP
#define CONIFOLD_GV_HPP

#include <string>
#include <vector>

#include "checker.hpp"

namespace conifold {

// One effective curve class: a label naming its formal variable and its
// genus-zero invariant.
struct GVClass {
  std::string label;
  long long n0 = 0;
};

struct GVDataset {
  std::vector<GVClass> classes;

  const GVClass* find(const std::string& label) const;
};

// Parses {"classes": [{"label": ..., "n0": ...}, ...]}.  Throws
// std::runtime_error with a descriptive message on malformed JSON,
// duplicate labels, or non-integer n0 values.
GVDataset load_gv_dataset(const std::string& json_text);

// Genus-zero resummation per class: each class has its own formal variable,
// and the degree-k coefficient of class beta is
//   n0_beta * (1/k) * [Laurent expansion of (2 sin(k lambda/2))^(-2)]
// truncated to the lambda-window of a genus_cut assembly.  Cross-terms
// between classes never occur.
struct MultiClassSeries {
  int genus_cut = 0;
  int k_cut = 0;
  std::vector<std::string> labels;  // dataset order
  std::map<std::string, QSeries<LambdaSeries>> per_class;
};

MultiClassSeries resum_genus0(const GVDataset& data, int genus_cut, int k_cut);

// Difference-equation check in the direction of class alpha: the second
// difference of the resummed series under a lambda-shift of alpha's variable
// must reproduce the double alpha-derivative of the classical genus-zero
// part.  Classes beta != alpha see the shift as the identity, so their
// second difference is computed and required to vanish identically; the
// alpha class reduces degree-wise to the single-variable difference check
// scaled by n0_alpha.  Throws on an unknown alpha label.
CheckReport check_gv_corollary(const GVDataset& data, const std::string& alpha,
                               int genus_cut, int k_cut);

// Runs the corollary check for every class in turn, returning the first
// failing report, or the last passing one.
CheckReport check_gv_corollary_all(const GVDataset& data, int genus_cut,
                                   int k_cut);

}  // namespace conifold

#endif  // CONIFOLD_GV_HPP
