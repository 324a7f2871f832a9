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
#include <vector>

#include "qic/config.hpp"

namespace qic {

/// Probability table mu(x, y) over finite alphabets X x Y, stored row-major
/// with x major.
struct InputDistribution {
  std::int64_t nx = 0;
  std::int64_t ny = 0;
  std::vector<double> p;

  double operator()(std::int64_t x, std::int64_t y) const {
    return p[static_cast<std::size_t>(x * ny + y)];
  }
  double& at(std::int64_t x, std::int64_t y) {
    return p[static_cast<std::size_t>(x * ny + y)];
  }

  void validate(const SimConfig& cfg = {}) const;

  static InputDistribution zero(std::int64_t nx, std::int64_t ny);
  static InputDistribution uniform(std::int64_t nx, std::int64_t ny);
  static InputDistribution point_mass(std::int64_t nx, std::int64_t ny,
                                      std::int64_t x, std::int64_t y);
};

/// Total-variation distance together with the common-part decomposition
///   mu1 = (1 - delta) common + delta rem1
///   mu2 = (1 - delta) common + delta rem2,
/// where common(x,y) is the normalized pointwise minimum. When delta is 0
/// (resp. 1) the remainder (resp. common) parts are not determined by the
/// decomposition; they are filled with copies of the inputs' common part
/// (resp. the uniform distribution) so that the identities above still hold.
struct TvDecomposition {
  double delta = 0.0;
  InputDistribution common;
  InputDistribution rem1;
  InputDistribution rem2;
};

TvDecomposition tv_distance(const InputDistribution& mu1,
                            const InputDistribution& mu2,
                            const SimConfig& cfg = {});

/// Product distribution on (X1 x X2) x (Y1 x Y2), with x = x1 * nx2 + x2
/// and y = y1 * ny2 + y2 (matching parallel protocol composition).
InputDistribution product_dist(const InputDistribution& mu1,
                               const InputDistribution& mu2);

/// Marginal of a joint distribution over (X1 x X2) x (Y1 x Y2) onto
/// coordinate 1 or 2.
InputDistribution marginal_dist(const InputDistribution& joint,
                                std::int64_t nx1, std::int64_t ny1,
                                std::int64_t nx2, std::int64_t ny2,
                                int which);

/// p * mu1 + (1 - p) * mu2.
InputDistribution mix_dist(double p, const InputDistribution& mu1,
                           const InputDistribution& mu2);

}  // namespace qic
