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
#include <stdexcept>
#include <string>

namespace qic {

inline constexpr const char* kVersion = "0.1.0";

/// Numerical tolerances and resource limits shared by all modules.
///
/// `dim_cap` bounds the side of any dense matrix the library will
/// materialize, and the length of the global amplitude vector a protocol
/// run may reach. Everything is overridable per call site.
struct SimConfig {
  double tol_norm = 1e-9;
  double tol_herm = 1e-9;
  double tol_psd = 1e-9;
  double tol_iso = 1e-9;
  std::int64_t dim_cap = 4096;
};

/// Thrown when an instance is too large for dense simulation.
struct dim_cap_error : std::runtime_error {
  explicit dim_cap_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an input object violates one of its declared invariants
/// (non-unit norm, non-Hermitian matrix, broken isometry chain, ...).
struct validation_error : std::invalid_argument {
  explicit validation_error(const std::string& what)
      : std::invalid_argument(what) {}
};

inline void check_dim_cap(std::int64_t dim, const SimConfig& cfg,
                          const char* what) {
  if (dim > cfg.dim_cap) {
    throw dim_cap_error(std::string(what) + ": dimension " +
                        std::to_string(dim) + " exceeds dim_cap " +
                        std::to_string(cfg.dim_cap));
  }
}

}  // namespace qic
