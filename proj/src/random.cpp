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

#include "qic/random.hpp"

#include <cmath>

namespace qic {

double Rng::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(eng_);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  return d(eng_);
}

cx Rng::gaussian() { return {normal_(eng_), normal_(eng_)}; }

Vec Rng::haar_vector(std::int64_t dim) {
  Vec v(dim);
  for (std::int64_t i = 0; i < dim; ++i) v(i) = gaussian();
  v /= v.norm();
  return v;
}

GlobalPureState Rng::haar_state(const RegisterLayout& layout) {
  GlobalPureState s;
  s.layout = layout;
  s.amps = haar_vector(layout.total_dim());
  return s;
}

DensityOperator Rng::density(const std::string& label, std::int64_t dim,
                             std::int64_t rank) {
  RegisterLayout layout({{label, dim}, {label + "_env", rank}});
  GlobalPureState s = haar_state(layout);
  return partial_trace(s, {label});
}

Mat Rng::isometry_matrix(std::int64_t out_dim, std::int64_t in_dim) {
  if (out_dim < in_dim) {
    throw validation_error("isometry_matrix: out_dim < in_dim");
  }
  Mat g(out_dim, in_dim);
  for (std::int64_t r = 0; r < out_dim; ++r) {
    for (std::int64_t c = 0; c < in_dim; ++c) g(r, c) = gaussian();
  }
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(out_dim, in_dim);
  // Fix phases so the factorization is unique given the input.
  Mat r_mat = q.adjoint() * g;
  for (std::int64_t c = 0; c < in_dim; ++c) {
    const cx d = r_mat(c, c);
    if (std::abs(d) > 1e-12) q.col(c) *= d / std::abs(d);
  }
  return q;
}

Isometry Rng::isometry(std::vector<RegisterDecl> in,
                       std::vector<RegisterDecl> out) {
  Isometry v;
  v.in = std::move(in);
  v.out = std::move(out);
  v.m = isometry_matrix(v.out_dim(), v.in_dim());
  return v;
}

InputDistribution Rng::distribution(std::int64_t nx, std::int64_t ny) {
  InputDistribution mu = InputDistribution::zero(nx, ny);
  double sum = 0.0;
  for (auto& v : mu.p) {
    v = -std::log(uniform(1e-12, 1.0));
    sum += v;
  }
  for (auto& v : mu.p) v /= sum;
  return mu;
}

ProtocolSpec random_protocol(Rng& rng, const RandomProtocolOptions& opts) {
  ProtocolSpec p;
  p.rounds = static_cast<int>(rng.uniform_int(1, opts.max_rounds));
  p.a_in = {{"X", opts.nx}};
  p.b_in = {{"Y", opts.ny}};

  std::int64_t ta = 1, tb = 1;
  if (opts.with_entanglement) {
    ta = rng.uniform_int(1, opts.max_prestate_dim);
    tb = rng.uniform_int(1, opts.max_prestate_dim);
  }
  if (ta > 1 || tb > 1) {
    p.t_a = {"TA"};
    p.t_b = {"TB"};
    p.prestate = rng.haar_state(RegisterLayout({{"TA", ta}, {"TB", tb}}));
  } else {
    p.prestate.layout = RegisterLayout({});
    p.prestate.amps = Vec::Ones(1);
  }

  // Holdings evolve as single memory registers per party.
  std::int64_t mem_a = opts.nx * ta, mem_b = opts.ny * tb;
  std::string mem_a_label, mem_b_label;  // empty while inputs not yet used
  std::int64_t msg = 1;
  std::string msg_label;
  for (int i = 1; i <= p.rounds; ++i) {
    const Party sender = p.sender_of(i);
    const bool alice = sender == Party::alice;
    RoundSpec rs;
    rs.sender = sender;

    std::vector<RegisterDecl> in;
    if (alice && mem_a_label.empty()) {
      in.push_back({"X", opts.nx});
      if (ta > 1) in.push_back({"TA", ta});
    } else if (!alice && mem_b_label.empty()) {
      in.push_back({"Y", opts.ny});
      if (tb > 1) in.push_back({"TB", tb});
    } else {
      in.push_back({alice ? mem_a_label : mem_b_label, alice ? mem_a : mem_b});
    }
    if (i > 1) in.push_back({msg_label, msg});

    std::int64_t in_dim = 1;
    for (const auto& r : in) in_dim *= r.dim;
    const std::int64_t c_dim = rng.uniform_int(2, opts.max_reg_dim + 1);
    std::int64_t m_dim = rng.uniform_int(1, opts.max_reg_dim);
    while (m_dim * c_dim < in_dim) m_dim += 1;

    const std::string mlab = "M" + std::to_string(i);
    const std::string clab = "C" + std::to_string(i);
    rs.op = rng.isometry(in, {{mlab, m_dim}, {clab, c_dim}});
    rs.comm = {clab};
    p.round_ops.push_back(std::move(rs));

    if (alice) {
      mem_a = m_dim;
      mem_a_label = mlab;
    } else {
      mem_b = m_dim;
      mem_b_label = mlab;
    }
    msg = c_dim;
    msg_label = clab;
  }

  // Closing isometry of the receiving party over its holdings + message.
  std::vector<RegisterDecl> in;
  const bool alice_final = p.final_party() == Party::alice;
  if (alice_final && mem_a_label.empty()) {
    in.push_back({"X", opts.nx});
    if (ta > 1) in.push_back({"TA", ta});
  } else if (!alice_final && mem_b_label.empty()) {
    in.push_back({"Y", opts.ny});
    if (tb > 1) in.push_back({"TB", tb});
  } else {
    in.push_back({alice_final ? mem_a_label : mem_b_label,
                  alice_final ? mem_a : mem_b});
  }
  in.push_back({msg_label, msg});
  std::int64_t in_dim = 1;
  for (const auto& r : in) in_dim *= r.dim;
  p.final_op = rng.isometry(in, {{"F", in_dim}});
  return p;
}

}  // namespace qic
