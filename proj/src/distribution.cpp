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

#include "qic/distribution.hpp"

#include <cmath>
#include <cstdlib>

namespace qic {

void InputDistribution::validate(const SimConfig& cfg) const {
  if (nx < 1 || ny < 1 ||
      p.size() != static_cast<std::size_t>(nx * ny)) {
    throw validation_error("distribution table shape mismatch");
  }
  double sum = 0.0;
  for (double v : p) {
    if (v < -cfg.tol_norm) {
      throw validation_error("distribution has negative entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > cfg.tol_norm) {
    throw validation_error("distribution sums to " + std::to_string(sum) +
                           ", not 1 within tol_norm");
  }
}

InputDistribution InputDistribution::zero(std::int64_t nx, std::int64_t ny) {
  return {nx, ny, std::vector<double>(static_cast<std::size_t>(nx * ny), 0.0)};
}

InputDistribution InputDistribution::uniform(std::int64_t nx,
                                             std::int64_t ny) {
  auto d = zero(nx, ny);
  const double v = 1.0 / static_cast<double>(nx * ny);
  for (auto& e : d.p) e = v;
  return d;
}

InputDistribution InputDistribution::point_mass(std::int64_t nx,
                                                std::int64_t ny,
                                                std::int64_t x,
                                                std::int64_t y) {
  auto d = zero(nx, ny);
  d.at(x, y) = 1.0;
  return d;
}

TvDecomposition tv_distance(const InputDistribution& mu1,
                            const InputDistribution& mu2,
                            const SimConfig& cfg) {
  mu1.validate(cfg);
  mu2.validate(cfg);
  if (mu1.nx != mu2.nx || mu1.ny != mu2.ny) {
    throw validation_error("tv_distance: support universes differ");
  }
  TvDecomposition out;
  out.common = InputDistribution::zero(mu1.nx, mu1.ny);
  out.rem1 = InputDistribution::zero(mu1.nx, mu1.ny);
  out.rem2 = InputDistribution::zero(mu1.nx, mu1.ny);

  double min_mass = 0.0;
  for (std::size_t i = 0; i < mu1.p.size(); ++i) {
    min_mass += std::min(mu1.p[i], mu2.p[i]);
  }
  const double delta = 1.0 - min_mass;
  out.delta = std::clamp(delta, 0.0, 1.0);

  if (min_mass > 0.0) {
    for (std::size_t i = 0; i < mu1.p.size(); ++i) {
      out.common.p[i] = std::min(mu1.p[i], mu2.p[i]) / min_mass;
    }
  } else {
    out.common = InputDistribution::uniform(mu1.nx, mu1.ny);
  }
  if (out.delta > 0.0) {
    for (std::size_t i = 0; i < mu1.p.size(); ++i) {
      const double m = std::min(mu1.p[i], mu2.p[i]);
      out.rem1.p[i] = std::max(mu1.p[i] - m, 0.0) / out.delta;
      out.rem2.p[i] = std::max(mu2.p[i] - m, 0.0) / out.delta;
    }
  } else {
    out.rem1 = out.common;
    out.rem2 = out.common;
  }
  return out;
}

InputDistribution product_dist(const InputDistribution& mu1,
                               const InputDistribution& mu2) {
  InputDistribution out =
      InputDistribution::zero(mu1.nx * mu2.nx, mu1.ny * mu2.ny);
  for (std::int64_t x1 = 0; x1 < mu1.nx; ++x1) {
    for (std::int64_t y1 = 0; y1 < mu1.ny; ++y1) {
      for (std::int64_t x2 = 0; x2 < mu2.nx; ++x2) {
        for (std::int64_t y2 = 0; y2 < mu2.ny; ++y2) {
          out.at(x1 * mu2.nx + x2, y1 * mu2.ny + y2) =
              mu1(x1, y1) * mu2(x2, y2);
        }
      }
    }
  }
  return out;
}

InputDistribution marginal_dist(const InputDistribution& joint,
                                std::int64_t nx1, std::int64_t ny1,
                                std::int64_t nx2, std::int64_t ny2,
                                int which) {
  if (joint.nx != nx1 * nx2 || joint.ny != ny1 * ny2) {
    throw validation_error("marginal_dist: alphabet sizes do not factor");
  }
  InputDistribution out = (which == 1) ? InputDistribution::zero(nx1, ny1)
                                       : InputDistribution::zero(nx2, ny2);
  for (std::int64_t x1 = 0; x1 < nx1; ++x1) {
    for (std::int64_t x2 = 0; x2 < nx2; ++x2) {
      for (std::int64_t y1 = 0; y1 < ny1; ++y1) {
        for (std::int64_t y2 = 0; y2 < ny2; ++y2) {
          const double v = joint(x1 * nx2 + x2, y1 * ny2 + y2);
          if (which == 1) {
            out.at(x1, y1) += v;
          } else {
            out.at(x2, y2) += v;
          }
        }
      }
    }
  }
  return out;
}

InputDistribution mix_dist(double p, const InputDistribution& mu1,
                           const InputDistribution& mu2) {
  if (mu1.nx != mu2.nx || mu1.ny != mu2.ny) {
    throw validation_error("mix_dist: alphabet sizes differ");
  }
  InputDistribution out = InputDistribution::zero(mu1.nx, mu1.ny);
  for (std::size_t i = 0; i < out.p.size(); ++i) {
    out.p[i] = p * mu1.p[i] + (1.0 - p) * mu2.p[i];
  }
  return out;
}

}  // namespace qic
