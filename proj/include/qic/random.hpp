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

#include <cstdint>
#include <random>

#include "qic/protocol.hpp"

namespace qic {

/// Seeded source of random states, channels, distributions and protocols.
/// Haar-like states come from normalized complex Gaussian vectors; random
/// density operators from partial traces of larger random pure states;
/// isometries from QR factorizations of Gaussian matrices.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0);
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);  // inclusive
  cx gaussian();

  Vec haar_vector(std::int64_t dim);
  GlobalPureState haar_state(const RegisterLayout& layout);
  /// Random rank-`rank` density operator on a single register.
  DensityOperator density(const std::string& label, std::int64_t dim,
                          std::int64_t rank);
  Mat isometry_matrix(std::int64_t out_dim, std::int64_t in_dim);
  Isometry isometry(std::vector<RegisterDecl> in, std::vector<RegisterDecl> out);
  InputDistribution distribution(std::int64_t nx, std::int64_t ny);

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

struct RandomProtocolOptions {
  int max_rounds = 3;
  std::int64_t nx = 2;
  std::int64_t ny = 2;
  std::int64_t max_reg_dim = 2;      // memory / communication registers
  std::int64_t max_prestate_dim = 2; // per-party entanglement share
  bool with_entanglement = true;
};

/// Random protocol with the structure of the communication model: random
/// round isometries over small registers, inputs kept in memory, no
/// declared outputs.
ProtocolSpec random_protocol(Rng& rng, const RandomProtocolOptions& opts = {});

}  // namespace qic
