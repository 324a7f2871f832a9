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
#include <string>
#include <vector>

#include "qic/config.hpp"

namespace qic {

struct PropertyResult {
  std::string suite;
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst = 0.0;  // largest violation observed across trials
};

/// Known suites: linalg, info, engine, and, disc. "all" runs every suite.
/// Deterministic given (suite, trials, seed). Composition-heavy checks
/// internally raise dim_cap as needed; all numerical tolerances come from
/// `cfg`-independent constants fixed by the checks themselves.
std::vector<PropertyResult> verify_suite(const std::string& suite, int trials,
                                         std::uint64_t seed,
                                         const SimConfig& cfg = {});

/// Constants pinned from the calibration runs recorded in data/calibration/.
namespace calibration {
/// Band for r * QIC(and_r, mu*) / log2(8 r) over r = 1..16.
inline constexpr double kDecayBandLo = 0.13;
inline constexpr double kDecayBandHi = 0.19;
/// Lower-bound constant: QIC(and_r, mu_w) - QIC(and_r, mu*) >= c * r * H(w).
inline constexpr double kMassBlowupConstant = 1.0;
}  // namespace calibration

}  // namespace qic
