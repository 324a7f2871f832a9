// Copyright 2026 The qicsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qic/info.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace qic {

namespace {

double entropy_of_spectrum(const Eigen::VectorXd& vals) {
  double h = 0.0;
  for (Eigen::Index k = 0; k < vals.size(); ++k) {
    const double lam = vals(k);
    if (lam > 0.0) h -= lam * std::log2(lam);
  }
  return h;
}

std::vector<std::string> disjoint_union(
    const std::vector<std::string>& a, const std::vector<std::string>& b,
    const char* what) {
  std::unordered_set<std::string> seen(a.begin(), a.end());
  for (const auto& l : b) {
    if (seen.count(l)) {
      throw validation_error(std::string(what) + ": label sets overlap on '" +
                             l + "'");
    }
  }
  std::vector<std::string> u = a;
  u.insert(u.end(), b.begin(), b.end());
  return u;
}

}  // namespace

double entropy(const GlobalPureState& state,
               const std::vector<std::string>& labels, const SimConfig& cfg) {
  if (labels.empty()) throw validation_error("entropy: empty label set");
  return entropy_of_spectrum(reduced_spectrum(state, labels, cfg));
}

double entropy(const DensityOperator& rho,
               const std::vector<std::string>& labels, const SimConfig& cfg) {
  return entropy(partial_trace(rho, labels, cfg), cfg);
}

double entropy(const DensityOperator& rho, const SimConfig& cfg) {
  check_dim_cap(rho.layout.total_dim(), cfg, "entropy");
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.mat, Eigen::EigenvaluesOnly);
  Eigen::VectorXd vals = es.eigenvalues();
  for (Eigen::Index k = 0; k < vals.size(); ++k) {
    if (vals(k) < -cfg.tol_psd) {
      throw validation_error("entropy: eigenvalue below -tol_psd");
    }
    vals(k) = std::max(vals(k), 0.0);
  }
  return entropy_of_spectrum(vals);
}

namespace {

// H over an arbitrary (possibly empty) label set on a pure global state.
double entropy_or_zero(const GlobalPureState& state,
                       const std::vector<std::string>& labels,
                       const SimConfig& cfg) {
  if (labels.empty()) return 0.0;
  return entropy_of_spectrum(reduced_spectrum(state, labels, cfg));
}

}  // namespace

double cond_entropy(const GlobalPureState& state,
                    const std::vector<std::string>& a_labels,
                    const std::vector<std::string>& b_labels,
                    const SimConfig& cfg) {
  if (a_labels.empty() || b_labels.empty()) {
    throw validation_error("cond_entropy: empty label set");
  }
  const auto ab = disjoint_union(a_labels, b_labels, "cond_entropy");
  return entropy_or_zero(state, ab, cfg) - entropy_or_zero(state, b_labels, cfg);
}

double cqmi(const GlobalPureState& state,
            const std::vector<std::string>& a_labels,
            const std::vector<std::string>& b_labels,
            const std::vector<std::string>& c_labels, const SimConfig& cfg) {
  if (a_labels.empty() || b_labels.empty()) {
    throw validation_error("cqmi: A and B label sets must be nonempty");
  }
  const auto ab = disjoint_union(a_labels, b_labels, "cqmi");
  const auto ac = disjoint_union(a_labels, c_labels, "cqmi");
  const auto bc = disjoint_union(b_labels, c_labels, "cqmi");
  const auto abc = disjoint_union(ab, c_labels, "cqmi");
  return entropy_or_zero(state, ac, cfg) + entropy_or_zero(state, bc, cfg) -
         entropy_or_zero(state, abc, cfg) - entropy_or_zero(state, c_labels, cfg);
}

double cqmi(const DensityOperator& rho,
            const std::vector<std::string>& a_labels,
            const std::vector<std::string>& b_labels,
            const std::vector<std::string>& c_labels, const SimConfig& cfg) {
  // The four-entropy form needs no global purity.
  auto h = [&](const std::vector<std::string>& ls) {
    if (ls.empty()) return 0.0;
    return entropy(partial_trace(rho, ls, cfg), cfg);
  };
  const auto ab = disjoint_union(a_labels, b_labels, "cqmi");
  const auto ac = disjoint_union(a_labels, c_labels, "cqmi");
  const auto bc = disjoint_union(b_labels, c_labels, "cqmi");
  const auto abc = disjoint_union(ab, c_labels, "cqmi");
  return h(ac) + h(bc) - h(abc) - h(c_labels);
}

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) {
    throw validation_error("binary_entropy: p outside [0, 1]");
  }
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

}  // namespace qic
