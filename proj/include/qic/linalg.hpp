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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "qic/config.hpp"
#include "qic/layout.hpp"

namespace qic {

using cx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Unit vector over a RegisterLayout; the simulator's single source of
/// truth for a protocol in flight. Always globally pure.
struct GlobalPureState {
  RegisterLayout layout;
  Vec amps;

  /// Throws validation_error unless the norm is 1 within cfg.tol_norm.
  void validate(const SimConfig& cfg = {}) const;
};

/// Dense density operator over a RegisterLayout.
struct DensityOperator {
  RegisterLayout layout;
  Mat mat;

  /// Hermitian within tol_herm, eigenvalues >= -tol_psd, unit trace.
  void validate(const SimConfig& cfg = {}) const;
};

/// Norm-preserving linear map between labeled register groups.
/// `m` has shape (out_dim x in_dim) with row/column indices running
/// row-major over the declared label orders.
struct Isometry {
  std::vector<RegisterDecl> in;
  std::vector<RegisterDecl> out;
  Mat m;

  std::int64_t in_dim() const;
  std::int64_t out_dim() const;
  /// Checks shapes and V†V = I within cfg.tol_iso.
  void validate(const SimConfig& cfg = {}) const;
};

/// Identity isometry on the given registers (also usable with no registers
/// at all, where it is the trivial 1x1 map).
Isometry identity_isometry(std::vector<RegisterDecl> regs);

/// Tensor product of isometries; label order is a's then b's.
Isometry tensor_isometry(const Isometry& a, const Isometry& b);

GlobalPureState tensor(const GlobalPureState& a, const GlobalPureState& b);

DensityOperator partial_trace(const GlobalPureState& state,
                              const std::vector<std::string>& keep,
                              const SimConfig& cfg = {});
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<std::string>& keep,
                              const SimConfig& cfg = {});

/// Canonical eigendecomposition purification sum_k sqrt(l_k) |k_A>|k_R>,
/// deterministic given the eig_hermitian ordering and sign rules. The fresh
/// register is appended with dim equal to the side of rho.
GlobalPureState purify(const DensityOperator& rho,
                       const std::string& fresh_label,
                       const SimConfig& cfg = {});

/// Applies v to the addressed registers and identity elsewhere, regardless
/// of where they sit in the layout. The result layout keeps untouched
/// labels in their original order and appends v's out labels.
GlobalPureState apply_isometry(const GlobalPureState& state, const Isometry& v,
                               const SimConfig& cfg = {});

/// V rho V† on the addressed registers (identity elsewhere).
DensityOperator apply_isometry(const DensityOperator& rho, const Isometry& v,
                               const SimConfig& cfg = {});

/// Tr|r1 - r2|; value in [0, 2]. Layouts must match.
double trace_distance(const DensityOperator& r1, const DensityOperator& r2,
                      const SimConfig& cfg = {});

struct EigResult {
  Eigen::VectorXd values;  // sorted descending
  Mat vectors;             // columns matching `values`
};

/// Hermitian eigendecomposition, eigenvalues descending, each eigenvector
/// phased so its first component of magnitude > 1e-9 is real positive.
EigResult eig_hermitian(const Mat& m, const SimConfig& cfg = {});

/// Reduced state of `keep` on the subnormalized branch where the classical
/// register `given.label` has basis value `given_value`. Returns the branch
/// probability through `prob_out`; the returned operator is normalized
/// (undefined and zero-filled when the probability is ~0).
DensityOperator conditional_density(const GlobalPureState& state,
                                    const std::vector<std::string>& keep,
                                    const std::string& given_label,
                                    std::int64_t given_value, double* prob_out,
                                    const SimConfig& cfg = {});

/// Eigenvalues of the reduced state on `labels` (descending, clamped to
/// [0, 1]); computed on the complement when that side is smaller, which is
/// valid because the global state is pure.
Eigen::VectorXd reduced_spectrum(const GlobalPureState& state,
                                 const std::vector<std::string>& labels,
                                 const SimConfig& cfg = {});

}  // namespace qic
