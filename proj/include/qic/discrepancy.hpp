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

#include "qic/distribution.hpp"

namespace qic {

/// 0/1 table g(x, y) for a small two-party boolean function.
struct BooleanTable {
  std::int64_t nx = 0;
  std::int64_t ny = 0;
  std::vector<std::uint8_t> v;  // row-major

  std::uint8_t operator()(std::int64_t x, std::int64_t y) const {
    return v[static_cast<std::size_t>(x * ny + y)];
  }
  void validate() const;

  static BooleanTable constant(std::int64_t nx, std::int64_t ny, int value);
  static BooleanTable xor2();
  static BooleanTable disj(int n);
};

/// Rectangle discrepancy value with the witness rectangle as row/column
/// bitmasks (bit x set means row x is in the rectangle).
struct DiscResult {
  double value = 0.0;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
};

/// Recomputes the witness rectangle's signed mass sum in the same column
/// order the search used.
double rectangle_value(const BooleanTable& g, const InputDistribution& mu,
                       std::uint32_t rows, std::uint32_t cols);

/// Exact maximum of |sum_{(x,y) in R} (-1)^g mu| over all rectangle pairs
/// including empty ones. Deterministic tie-break: the lexicographically
/// smallest (row mask, column mask) wins. Requires nx + ny <= 24.
DiscResult disc_oracle(const BooleanTable& g, const InputDistribution& mu);

/// Same maximum via per-row-subset column sums: for each row set the best
/// column set keeps all positive (or all negative) sums. Agrees with
/// disc_oracle exactly; the witness is the first optimal row mask with the
/// strictly-signed column set. Requires nx <= 24.
DiscResult disc_fast(const BooleanTable& g, const InputDistribution& mu);

struct GdmResult {
  double value = 0.0;       // log2(1 / disc) of the best admissible g
  BooleanTable witness_g;
  std::uint32_t flips = 0;  // cell mask of the flipped entries
};

/// Generalized discrepancy bound: maximum of log2(1/disc(g)) over tables g
/// that differ from f on cells of mu-mass at most delta. Enumerates flip
/// sets by increasing size, then by mask; requires nx * ny <= 20.
GdmResult gdm_delta(const BooleanTable& f, const InputDistribution& mu,
                    double delta);

struct GdmSearchResult {
  double value = 0.0;
  InputDistribution argmax;
};

/// Grid search of gdm_delta over the simplex of input distributions; a
/// lower bound on the prior-free quantity by construction.
GdmSearchResult gdm_search(const BooleanTable& f, double delta,
                           double grid_step);

}  // namespace qic
