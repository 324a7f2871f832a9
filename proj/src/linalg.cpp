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

#include "qic/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace qic {

// ---------------------------------------------------------------------------
// RegisterLayout

RegisterLayout::RegisterLayout(std::vector<RegisterDecl> regs)
    : regs_(std::move(regs)) {
  std::unordered_set<std::string> seen;
  for (const auto& r : regs_) {
    if (r.dim < 1) {
      throw validation_error("register '" + r.label + "' has dim " +
                             std::to_string(r.dim));
    }
    if (!seen.insert(r.label).second) {
      throw validation_error("duplicate register label '" + r.label + "'");
    }
    total_ *= r.dim;
  }
}

RegisterLayout RegisterLayout::concat(const RegisterLayout& a,
                                      const RegisterLayout& b) {
  std::vector<RegisterDecl> regs = a.regs_;
  regs.insert(regs.end(), b.regs_.begin(), b.regs_.end());
  return RegisterLayout(std::move(regs));
}

bool RegisterLayout::has(const std::string& label) const {
  for (const auto& r : regs_) {
    if (r.label == label) return true;
  }
  return false;
}

std::size_t RegisterLayout::pos(const std::string& label) const {
  for (std::size_t k = 0; k < regs_.size(); ++k) {
    if (regs_[k].label == label) return k;
  }
  throw validation_error("unknown register label '" + label + "'");
}

std::int64_t RegisterLayout::dim_of(const std::string& label) const {
  return regs_[pos(label)].dim;
}

std::int64_t RegisterLayout::dim_of_group(
    const std::vector<std::string>& labels) const {
  std::int64_t d = 1;
  for (const auto& l : labels) d *= dim_of(l);
  return d;
}

std::vector<std::string> RegisterLayout::complement(
    const std::vector<std::string>& labels) const {
  std::unordered_set<std::string> drop;
  for (const auto& l : labels) {
    pos(l);  // existence check
    drop.insert(l);
  }
  std::vector<std::string> rest;
  for (const auto& r : regs_) {
    if (!drop.count(r.label)) rest.push_back(r.label);
  }
  return rest;
}

std::vector<std::string> RegisterLayout::in_layout_order(
    const std::vector<std::string>& labels) const {
  std::unordered_set<std::string> want;
  for (const auto& l : labels) {
    pos(l);
    if (!want.insert(l).second) {
      throw validation_error("label '" + l + "' repeated in group");
    }
  }
  std::vector<std::string> ordered;
  for (const auto& r : regs_) {
    if (want.count(r.label)) ordered.push_back(r.label);
  }
  return ordered;
}

std::vector<std::string> RegisterLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(regs_.size());
  for (const auto& r : regs_) out.push_back(r.label);
  return out;
}

std::vector<std::int64_t> regroup_indices(
    const RegisterLayout& layout, const std::vector<std::string>& group) {
  const auto& regs = layout.regs();
  const std::size_t n = regs.size();

  // group_slot[k] = position of label k within `group`, or -1.
  std::vector<int> group_slot(n, -1);
  for (std::size_t gi = 0; gi < group.size(); ++gi) {
    group_slot[layout.pos(group[gi])] = static_cast<int>(gi);
  }

  // Strides of each source position within the (env, group) target index.
  std::vector<std::int64_t> g_stride(group.size());
  std::int64_t dg = 1;
  for (std::size_t gi = group.size(); gi-- > 0;) {
    g_stride[gi] = dg;
    dg *= layout.dim_of(group[gi]);
  }
  std::vector<std::int64_t> tgt_stride(n);
  std::int64_t de = 1;
  for (std::size_t k = n; k-- > 0;) {
    if (group_slot[k] < 0) {
      tgt_stride[k] = de;
      de *= regs[k].dim;
    } else {
      tgt_stride[k] = g_stride[group_slot[k]];
    }
  }

  const std::int64_t total = layout.total_dim();
  std::vector<std::int64_t> src(total);
  // Walk source indices in order, maintaining digits incrementally.
  std::vector<std::int64_t> digit(n, 0);
  std::int64_t tgt = 0;
  for (std::int64_t i = 0; i < total; ++i) {
    src[static_cast<std::size_t>(tgt)] = i;
    // increment mixed-radix counter (least-significant label last)
    for (std::size_t k = n; k-- > 0;) {
      digit[k]++;
      tgt += (group_slot[k] < 0) ? tgt_stride[k] * dg : tgt_stride[k];
      if (digit[k] < regs[k].dim) break;
      tgt -= ((group_slot[k] < 0) ? tgt_stride[k] * dg : tgt_stride[k]) *
             regs[k].dim;
      digit[k] = 0;
    }
  }
  return src;
}

// ---------------------------------------------------------------------------
// States

void GlobalPureState::validate(const SimConfig& cfg) const {
  if (amps.size() != layout.total_dim()) {
    throw validation_error("amplitude vector length " +
                           std::to_string(amps.size()) +
                           " does not match layout dimension " +
                           std::to_string(layout.total_dim()));
  }
  const double n = amps.norm();
  if (std::abs(n - 1.0) > cfg.tol_norm) {
    throw validation_error("state norm " + std::to_string(n) +
                           " is not 1 within tol_norm");
  }
}

void DensityOperator::validate(const SimConfig& cfg) const {
  if (mat.rows() != mat.cols() || mat.rows() != layout.total_dim()) {
    throw validation_error("density matrix shape does not match layout");
  }
  const double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm > cfg.tol_herm) {
    throw validation_error("density matrix is not Hermitian within tol_herm");
  }
  if (std::abs(mat.trace().real() - 1.0) > cfg.tol_norm ||
      std::abs(mat.trace().imag()) > cfg.tol_norm) {
    throw validation_error("density matrix trace is not 1 within tol_norm");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(mat, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -cfg.tol_psd) {
    throw validation_error("density matrix has eigenvalue below -tol_psd");
  }
}

// ---------------------------------------------------------------------------
// Isometry

std::int64_t Isometry::in_dim() const {
  std::int64_t d = 1;
  for (const auto& r : in) d *= r.dim;
  return d;
}

std::int64_t Isometry::out_dim() const {
  std::int64_t d = 1;
  for (const auto& r : out) d *= r.dim;
  return d;
}

void Isometry::validate(const SimConfig& cfg) const {
  if (m.rows() != out_dim() || m.cols() != in_dim()) {
    throw validation_error("isometry matrix shape (" +
                           std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) +
                           ") does not match declared registers");
  }
  if (out_dim() < in_dim()) {
    throw validation_error("isometry output dim smaller than input dim");
  }
  Mat gram = m.adjoint() * m;
  gram -= Mat::Identity(in_dim(), in_dim());
  if (gram.cwiseAbs().maxCoeff() > cfg.tol_iso) {
    throw validation_error("V†V deviates from identity beyond tol_iso");
  }
}

Isometry identity_isometry(std::vector<RegisterDecl> regs) {
  Isometry v;
  v.in = regs;
  v.out = std::move(regs);
  v.m = Mat::Identity(v.in_dim(), v.in_dim());
  return v;
}

Isometry tensor_isometry(const Isometry& a, const Isometry& b) {
  Isometry v;
  v.in = a.in;
  v.in.insert(v.in.end(), b.in.begin(), b.in.end());
  v.out = a.out;
  v.out.insert(v.out.end(), b.out.begin(), b.out.end());
  v.m = Mat(a.m.rows() * b.m.rows(), a.m.cols() * b.m.cols());
  for (std::int64_t r = 0; r < a.m.rows(); ++r) {
    for (std::int64_t c = 0; c < a.m.cols(); ++c) {
      v.m.block(r * b.m.rows(), c * b.m.cols(), b.m.rows(), b.m.cols()) =
          a.m(r, c) * b.m;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Operations

GlobalPureState tensor(const GlobalPureState& a, const GlobalPureState& b) {
  for (const auto& r : b.layout.regs()) {
    if (a.layout.has(r.label)) {
      throw validation_error("tensor: label collision on '" + r.label + "'");
    }
  }
  GlobalPureState out;
  out.layout = RegisterLayout::concat(a.layout, b.layout);
  const std::int64_t db = b.layout.total_dim();
  out.amps = Vec(out.layout.total_dim());
  for (std::int64_t i = 0; i < a.amps.size(); ++i) {
    out.amps.segment(i * db, db) = a.amps(i) * b.amps;
  }
  return out;
}

namespace {

RegisterLayout sublayout(const RegisterLayout& layout,
                         const std::vector<std::string>& labels) {
  std::vector<RegisterDecl> regs;
  regs.reserve(labels.size());
  for (const auto& l : labels) regs.push_back({l, layout.dim_of(l)});
  return RegisterLayout(std::move(regs));
}

// Reduced density matrix on `keep` (given in the desired output order),
// computed from a pure global state.
Mat reduced_from_pure(const GlobalPureState& state,
                      const std::vector<std::string>& keep) {
  const auto src = regroup_indices(state.layout, keep);
  const std::int64_t dk = state.layout.dim_of_group(keep);
  const std::int64_t de = state.layout.total_dim() / dk;
  Mat psi(dk, de);  // psi(k, e)
  for (std::int64_t e = 0; e < de; ++e) {
    for (std::int64_t k = 0; k < dk; ++k) {
      psi(k, e) = state.amps(src[static_cast<std::size_t>(e * dk + k)]);
    }
  }
  return psi * psi.adjoint();
}

}  // namespace

DensityOperator partial_trace(const GlobalPureState& state,
                              const std::vector<std::string>& keep,
                              const SimConfig& cfg) {
  if (keep.empty()) throw validation_error("partial_trace: empty keep set");
  const auto ordered = state.layout.in_layout_order(keep);
  check_dim_cap(state.layout.dim_of_group(ordered), cfg, "partial_trace");
  DensityOperator rho;
  rho.layout = sublayout(state.layout, ordered);
  rho.mat = reduced_from_pure(state, ordered);
  return rho;
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<std::string>& keep,
                              const SimConfig& cfg) {
  if (keep.empty()) throw validation_error("partial_trace: empty keep set");
  const auto ordered = rho.layout.in_layout_order(keep);
  const std::int64_t dk = rho.layout.dim_of_group(ordered);
  check_dim_cap(dk, cfg, "partial_trace");
  const auto src = regroup_indices(rho.layout, ordered);
  const std::int64_t de = rho.layout.total_dim() / dk;
  DensityOperator out;
  out.layout = sublayout(rho.layout, ordered);
  out.mat = Mat::Zero(dk, dk);
  for (std::int64_t e = 0; e < de; ++e) {
    for (std::int64_t i = 0; i < dk; ++i) {
      const auto si = src[static_cast<std::size_t>(e * dk + i)];
      for (std::int64_t j = 0; j < dk; ++j) {
        out.mat(i, j) += rho.mat(si, src[static_cast<std::size_t>(e * dk + j)]);
      }
    }
  }
  return out;
}

GlobalPureState purify(const DensityOperator& rho,
                       const std::string& fresh_label, const SimConfig& cfg) {
  rho.validate(cfg);
  if (rho.layout.has(fresh_label)) {
    throw validation_error("purify: fresh label '" + fresh_label +
                           "' already in layout");
  }
  const std::int64_t d = rho.layout.total_dim();
  check_dim_cap(d * d, cfg, "purify");
  const EigResult eig = eig_hermitian(rho.mat, cfg);
  GlobalPureState out;
  out.layout = RegisterLayout::concat(
      rho.layout, RegisterLayout({RegisterDecl{fresh_label, d}}));
  out.amps = Vec::Zero(d * d);
  for (std::int64_t k = 0; k < d; ++k) {
    const double lam = std::max(eig.values(k), 0.0);
    if (lam <= 0.0) continue;
    const double s = std::sqrt(lam);
    for (std::int64_t a = 0; a < d; ++a) {
      out.amps(a * d + k) = s * eig.vectors(a, k);
    }
  }
  return out;
}

GlobalPureState apply_isometry(const GlobalPureState& state, const Isometry& v,
                               const SimConfig& cfg) {
  v.validate(cfg);
  std::vector<std::string> in_labels;
  for (const auto& r : v.in) {
    if (state.layout.dim_of(r.label) != r.dim) {
      throw validation_error("apply_isometry: register '" + r.label +
                             "' has dim " +
                             std::to_string(state.layout.dim_of(r.label)) +
                             ", isometry expects " + std::to_string(r.dim));
    }
    in_labels.push_back(r.label);
  }
  const auto rest = state.layout.complement(in_labels);
  for (const auto& r : v.out) {
    for (const auto& kept : rest) {
      if (kept == r.label) {
        throw validation_error("apply_isometry: output label '" + r.label +
                               "' collides with untouched register");
      }
    }
  }
  const std::int64_t di = v.in_dim();
  const std::int64_t de = state.layout.total_dim() / di;
  check_dim_cap(de * v.out_dim(), cfg, "apply_isometry");

  const auto src = regroup_indices(state.layout, in_labels);
  Mat psi(de, di);
  for (std::int64_t e = 0; e < de; ++e) {
    for (std::int64_t i = 0; i < di; ++i) {
      psi(e, i) = state.amps(src[static_cast<std::size_t>(e * di + i)]);
    }
  }
  Mat moved = psi * v.m.transpose();  // (e, o)

  GlobalPureState out;
  std::vector<RegisterDecl> regs;
  for (const auto& l : rest) regs.push_back({l, state.layout.dim_of(l)});
  regs.insert(regs.end(), v.out.begin(), v.out.end());
  out.layout = RegisterLayout(std::move(regs));
  const std::int64_t dout = v.out_dim();
  out.amps = Vec(de * dout);
  for (std::int64_t e = 0; e < de; ++e) {
    out.amps.segment(e * dout, dout) = moved.row(e).transpose();
  }
  return out;
}

DensityOperator apply_isometry(const DensityOperator& rho, const Isometry& v,
                               const SimConfig& cfg) {
  v.validate(cfg);
  std::vector<std::string> in_labels;
  for (const auto& r : v.in) in_labels.push_back(r.label);
  const auto rest = rho.layout.complement(in_labels);
  const std::int64_t di = v.in_dim();
  const std::int64_t de = rho.layout.total_dim() / di;
  check_dim_cap(de * v.out_dim(), cfg, "apply_isometry");

  const auto src = regroup_indices(rho.layout, in_labels);
  // P moves (env, in) to the front in that order; rho' = P rho P†.
  Mat perm = Mat::Zero(rho.layout.total_dim(), rho.layout.total_dim());
  for (std::int64_t t = 0; t < rho.layout.total_dim(); ++t) {
    perm(t, src[static_cast<std::size_t>(t)]) = 1.0;
  }
  Mat reord = perm * rho.mat * perm.transpose();
  // Extend V to env ⊗ in.
  Mat big = Mat::Zero(de * v.out_dim(), de * di);
  for (std::int64_t e = 0; e < de; ++e) {
    big.block(e * v.out_dim(), e * di, v.out_dim(), di) = v.m;
  }
  DensityOperator out;
  std::vector<RegisterDecl> regs;
  for (const auto& l : rest) regs.push_back({l, rho.layout.dim_of(l)});
  regs.insert(regs.end(), v.out.begin(), v.out.end());
  out.layout = RegisterLayout(std::move(regs));
  out.mat = big * reord * big.adjoint();
  return out;
}

double trace_distance(const DensityOperator& r1, const DensityOperator& r2,
                      const SimConfig& cfg) {
  if (!(r1.layout == r2.layout)) {
    throw validation_error("trace_distance: layout mismatch");
  }
  check_dim_cap(r1.layout.total_dim(), cfg, "trace_distance");
  Eigen::SelfAdjointEigenSolver<Mat> es(r1.mat - r2.mat,
                                        Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

EigResult eig_hermitian(const Mat& m, const SimConfig& cfg) {
  if (m.rows() != m.cols()) {
    throw validation_error("eig_hermitian: matrix not square");
  }
  check_dim_cap(m.rows(), cfg, "eig_hermitian");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > cfg.tol_herm) {
    throw validation_error("eig_hermitian: matrix not Hermitian within tol");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  const std::int64_t n = m.rows();
  EigResult out;
  out.values = Eigen::VectorXd(n);
  out.vectors = Mat(n, n);
  for (std::int64_t k = 0; k < n; ++k) {
    out.values(k) = es.eigenvalues()(n - 1 - k);
    Vec col = es.eigenvectors().col(n - 1 - k);
    for (std::int64_t j = 0; j < n; ++j) {
      if (std::abs(col(j)) > 1e-9) {
        col *= std::conj(col(j)) / std::abs(col(j));
        break;
      }
    }
    out.vectors.col(k) = col;
  }
  return out;
}

DensityOperator conditional_density(const GlobalPureState& state,
                                    const std::vector<std::string>& keep,
                                    const std::string& given_label,
                                    std::int64_t given_value, double* prob_out,
                                    const SimConfig& cfg) {
  const std::int64_t dg = state.layout.dim_of(given_label);
  if (given_value < 0 || given_value >= dg) {
    throw validation_error("conditional_density: basis value out of range");
  }
  // Project onto the branch, renormalize, then reduce.
  const auto src = regroup_indices(state.layout, {given_label});
  GlobalPureState branch;
  branch.layout = state.layout;
  branch.amps = Vec::Zero(state.amps.size());
  double p = 0.0;
  const std::int64_t de = state.layout.total_dim() / dg;
  for (std::int64_t e = 0; e < de; ++e) {
    const auto i = src[static_cast<std::size_t>(e * dg + given_value)];
    branch.amps(i) = state.amps(i);
    p += std::norm(state.amps(i));
  }
  if (prob_out != nullptr) *prob_out = p;
  const auto ordered = state.layout.in_layout_order(keep);
  DensityOperator rho;
  rho.layout = sublayout(state.layout, ordered);
  if (p < 1e-300) {
    rho.mat = Mat::Zero(rho.layout.total_dim(), rho.layout.total_dim());
    return rho;
  }
  branch.amps /= std::sqrt(p);
  check_dim_cap(rho.layout.total_dim(), cfg, "conditional_density");
  rho.mat = reduced_from_pure(branch, ordered);
  return rho;
}

Eigen::VectorXd reduced_spectrum(const GlobalPureState& state,
                                 const std::vector<std::string>& labels,
                                 const SimConfig& cfg) {
  auto side = state.layout.in_layout_order(labels);
  const auto comp = state.layout.complement(side);
  if (comp.empty()) {
    // reduced state of everything is the pure global state itself
    Eigen::VectorXd vals = Eigen::VectorXd::Zero(1);
    vals(0) = 1.0;
    return vals;
  }
  if (state.layout.dim_of_group(comp) < state.layout.dim_of_group(side)) {
    side = comp;  // same spectrum up to zeros: the global state is pure
  }
  check_dim_cap(state.layout.dim_of_group(side), cfg, "reduced_spectrum");
  if (side.empty()) {
    Eigen::VectorXd one(1);
    one(0) = state.amps.squaredNorm();
    return one;
  }
  Mat rho = reduced_from_pure(state, side);
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  Eigen::VectorXd vals = es.eigenvalues().reverse();
  for (std::int64_t k = 0; k < vals.size(); ++k) {
    if (vals(k) < -cfg.tol_psd) {
      throw validation_error("reduced state eigenvalue below -tol_psd");
    }
    vals(k) = std::clamp(vals(k), 0.0, 1.0);
  }
  return vals;
}

}  // namespace qic
