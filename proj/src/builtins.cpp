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

#include "qic/builtins.hpp"

#include <cmath>

#include "qic/info.hpp"

namespace qic {

namespace {

constexpr double kPi = 3.14159265358979323846;

Mat reflection_about(double angle) {
  Mat m(2, 2);
  m(0, 0) = std::cos(2 * angle);
  m(0, 1) = std::sin(2 * angle);
  m(1, 0) = std::sin(2 * angle);
  m(1, 1) = -std::cos(2 * angle);
  return m;
}

Mat phase_flip() {
  Mat m = Mat::Identity(2, 2);
  m(1, 1) = -1.0;
  return m;
}

// |x>|c> -> |x> (U^x |c>) on registers (ctrl, target).
Mat controlled(const Mat& u) {
  Mat m = Mat::Identity(4, 4);
  m.block(2, 2, 2, 2) = u;
  return m;
}

}  // namespace

double AndProtocolParams::theta() const {
  if (r < 1) throw validation_error("AND protocol needs r >= 1");
  return kPi / (8.0 * static_cast<double>(r));
}

ProtocolSpec build_and_protocol(const AndProtocolParams& params) {
  const double theta = params.theta();
  const Mat refl = reflection_about(theta);
  const Mat z = phase_flip();
  const int messages = 4 * params.r;

  ProtocolSpec p;
  p.rounds = messages;
  p.a_in = {{"X", 2}};
  p.b_in = {{"Y", 2}};
  p.prestate.layout = RegisterLayout({});
  p.prestate.amps = Vec::Ones(1);

  auto comm_label = [](int i) { return "C" + std::to_string(i); };

  for (int i = 1; i <= messages; ++i) {
    RoundSpec rs;
    rs.sender = (i % 2 == 1) ? Party::alice : Party::bob;
    if (i == 1) {
      // |x> -> |x> (U_v^x |0>)
      rs.op.in = {{"X", 2}};
      rs.op.out = {{"X", 2}, {comm_label(1), 2}};
      Mat m = Mat::Zero(4, 2);
      m(0, 0) = 1.0;                 // x = 0: prepare |0>
      m.block(2, 1, 2, 1) = refl.col(0);  // x = 1: prepare U_v |0>
      rs.op.m = m;
    } else if (i < messages) {
      const bool alice = (i % 2 == 1);
      rs.op.in = {{alice ? "X" : "Y", 2}, {comm_label(i - 1), 2}};
      rs.op.out = {{alice ? "X" : "Y", 2}, {comm_label(i), 2}};
      rs.op.m = controlled(alice ? refl : z);
    } else {
      // Bob's closing message: apply Z^y, copy the qubit into OB and send
      // the copy onwards.
      rs.op.in = {{"Y", 2}, {comm_label(i - 1), 2}};
      rs.op.out = {{"Y", 2}, {"OB", 2}, {comm_label(i), 2}};
      Mat m = Mat::Zero(8, 4);
      const Mat cz = controlled(z);
      for (std::int64_t yin = 0; yin < 2; ++yin) {
        for (std::int64_t c = 0; c < 2; ++c) {
          for (std::int64_t b = 0; b < 2; ++b) {
            // out index (y, ob=b, c=b), in index (y, c)
            m((yin * 2 + b) * 2 + b, yin * 2 + c) = cz(yin * 2 + b, yin * 2 + c);
          }
        }
      }
      rs.op.m = m;
    }
    rs.comm = {comm_label(i)};
    p.round_ops.push_back(std::move(rs));
  }
  // Alice keeps the received copy as her output.
  p.final_op.in = {{comm_label(messages), 2}};
  p.final_op.out = {{"OA", 2}};
  p.final_op.m = Mat::Identity(2, 2);
  p.a_out = {"OA"};
  p.b_out = {"OB"};
  return p;
}

double and_round_entropy(int message_index, const AndProtocolParams& params,
                         double w, AndBranch branch) {
  const double theta = params.theta();
  if (message_index % 2 != 1) {
    throw validation_error(
        "and_round_entropy: closed forms cover odd message indices only");
  }
  if (branch == AndBranch::y_equals_0) {
    return (message_index % 4 == 1) ? binary_entropy(std::pow(std::sin(theta), 2))
                                    : 0.0;
  }
  if (w < 0.0 || w > 0.5) {
    throw validation_error("and_round_entropy: w outside [0, 1/2]");
  }
  const double s =
      std::pow(std::sin((message_index + 1) * theta), 2);
  const double disc =
      1.0 - 12.0 * w * (1.0 - w) * s / std::pow(1.0 + 2.0 * w, 2);
  const double lam = (1.0 - std::sqrt(std::max(disc, 0.0))) / 2.0;
  return binary_entropy(lam);
}

InputDistribution mu_star() { return mu_with_mass(0.0); }

InputDistribution mu_with_mass(double w) {
  if (w < 0.0 || w > 1.0) {
    throw validation_error("mu_with_mass: w outside [0, 1]");
  }
  InputDistribution mu = InputDistribution::zero(2, 2);
  mu.at(0, 0) = (1.0 - w) / 3.0;
  mu.at(0, 1) = (1.0 - w) / 3.0;
  mu.at(1, 0) = (1.0 - w) / 3.0;
  mu.at(1, 1) = w;
  return mu;
}

TaskSpec and_task() {
  return TaskSpec::function(2, 2, 2, {0, 0, 0, 1});
}

TaskSpec disj_task(int n) {
  const std::int64_t size = std::int64_t{1} << n;
  std::vector<std::int64_t> f(static_cast<std::size_t>(size * size));
  for (std::int64_t x = 0; x < size; ++x) {
    for (std::int64_t y = 0; y < size; ++y) {
      f[static_cast<std::size_t>(x * size + y)] = ((x & y) == 0) ? 1 : 0;
    }
  }
  return TaskSpec::function(size, size, 2, f);
}

ProtocolSpec build_classical_exchange(const TaskSpec& task) {
  task.validate();
  if (task.nza != task.nzb) {
    throw validation_error("build_classical_exchange: needs a function task");
  }
  // Extract the function value per input; it must be unique and diagonal.
  std::vector<std::int64_t> f(static_cast<std::size_t>(task.nx * task.ny), -1);
  for (std::int64_t x = 0; x < task.nx; ++x) {
    for (std::int64_t y = 0; y < task.ny; ++y) {
      for (std::int64_t za = 0; za < task.nza; ++za) {
        for (std::int64_t zb = 0; zb < task.nzb; ++zb) {
          if (!task.ok(x, y, za, zb)) continue;
          if (za != zb || f[static_cast<std::size_t>(x * task.ny + y)] >= 0) {
            throw validation_error(
                "build_classical_exchange: task is not a function");
          }
          f[static_cast<std::size_t>(x * task.ny + y)] = za;
        }
      }
    }
  }
  const std::int64_t nx = task.nx, ny = task.ny, nz = task.nza;

  ProtocolSpec p;
  p.rounds = 2;
  p.a_in = {{"X", nx}};
  p.b_in = {{"Y", ny}};
  p.prestate.layout = RegisterLayout({});
  p.prestate.amps = Vec::Ones(1);

  {
    RoundSpec rs;  // |x> -> |x>|x>
    rs.sender = Party::alice;
    rs.op.in = {{"X", nx}};
    rs.op.out = {{"X", nx}, {"C1", nx}};
    rs.op.m = Mat::Zero(nx * nx, nx);
    for (std::int64_t x = 0; x < nx; ++x) rs.op.m(x * nx + x, x) = 1.0;
    rs.comm = {"C1"};
    p.round_ops.push_back(std::move(rs));
  }
  {
    RoundSpec rs;  // |y>|x> -> |y>|x>|f(x,y)>^{ZB} |f(x,y)>^{C2}
    rs.sender = Party::bob;
    rs.op.in = {{"Y", ny}, {"C1", nx}};
    rs.op.out = {{"Y", ny}, {"XB", nx}, {"ZB", nz}, {"C2", nz}};
    rs.op.m = Mat::Zero(ny * nx * nz * nz, ny * nx);
    for (std::int64_t y = 0; y < ny; ++y) {
      for (std::int64_t x = 0; x < nx; ++x) {
        const std::int64_t z = f[static_cast<std::size_t>(x * ny + y)];
        rs.op.m(((y * nx + x) * nz + z) * nz + z, y * nx + x) = 1.0;
      }
    }
    rs.comm = {"C2"};
    p.round_ops.push_back(std::move(rs));
  }
  p.final_op.in = {{"C2", nz}};
  p.final_op.out = {{"ZA", nz}};
  p.final_op.m = Mat::Identity(nz, nz);
  p.a_out = {"ZA"};
  p.b_out = {"ZB"};
  return p;
}

ProtocolSpec build_dummy(int rounds, std::int64_t dim, std::int64_t nx,
                         std::int64_t ny) {
  if (rounds < 1 || dim < 1) {
    throw validation_error("build_dummy: rounds and dim must be positive");
  }
  ProtocolSpec p;
  p.rounds = rounds;
  p.a_in = {{"X", nx}};
  p.b_in = {{"Y", ny}};
  p.prestate.layout = RegisterLayout({});
  p.prestate.amps = Vec::Ones(1);
  for (int i = 1; i <= rounds; ++i) {
    RoundSpec rs;
    rs.sender = p.sender_of(i);
    const std::string label = "D" + std::to_string(i);
    rs.op.in = {};
    rs.op.out = {{label, dim}};
    rs.op.m = Mat::Zero(dim, 1);
    rs.op.m(0, 0) = 1.0;  // fresh |0>
    rs.comm = {label};
    p.round_ops.push_back(std::move(rs));
  }
  p.final_op = identity_isometry({});
  return p;
}

ProtocolSpec build_disj_from_and(const AndProtocolParams& params, int n) {
  if (n < 1) throw validation_error("build_disj_from_and: n must be >= 1");
  ProtocolSpec p = repeat_n(build_and_protocol(params), n);

  // Collect the per-coordinate output labels (in coordinate order).
  const std::vector<std::string> oa = p.a_out, ob = p.b_out;

  auto nor_isometry = [&](const std::vector<std::string>& outs,
                          const std::string& target) {
    Isometry v;
    const std::int64_t size = std::int64_t{1} << n;
    for (const auto& l : outs) v.in.push_back({l, 2});
    v.out = v.in;
    v.out.push_back({target, 2});
    v.m = Mat::Zero(size * 2, size);
    for (std::int64_t o = 0; o < size; ++o) {
      const std::int64_t disj = (o == 0) ? 1 : 0;
      v.m(o * 2 + disj, o) = 1.0;
    }
    return v;
  };

  // Bob computes his DISJ answer inside his closing round; Alice inside the
  // final isometry (after her copies of the answers arrived).
  RoundSpec& bob_last = p.round_ops[static_cast<std::size_t>(p.rounds - 1)];
  bob_last.op = compose_after(bob_last.op, nor_isometry(ob, "DB"));
  p.final_op = compose_after(p.final_op, nor_isometry(oa, "DA"));
  p.a_out = {"DA"};
  p.b_out = {"DB"};
  return p;
}

}  // namespace qic
