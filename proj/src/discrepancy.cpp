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

#include "qic/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qic {

void BooleanTable::validate() const {
  if (nx < 1 || ny < 1 || v.size() != static_cast<std::size_t>(nx * ny)) {
    throw validation_error("boolean table shape mismatch");
  }
  for (auto e : v) {
    if (e > 1) throw validation_error("boolean table entry outside {0,1}");
  }
}

BooleanTable BooleanTable::constant(std::int64_t nx, std::int64_t ny,
                                    int value) {
  BooleanTable t;
  t.nx = nx;
  t.ny = ny;
  t.v.assign(static_cast<std::size_t>(nx * ny),
             static_cast<std::uint8_t>(value));
  return t;
}

BooleanTable BooleanTable::xor2() {
  BooleanTable t = constant(2, 2, 0);
  t.v = {0, 1, 1, 0};
  return t;
}

BooleanTable BooleanTable::disj(int n) {
  const std::int64_t size = std::int64_t{1} << n;
  BooleanTable t = constant(size, size, 0);
  for (std::int64_t x = 0; x < size; ++x) {
    for (std::int64_t y = 0; y < size; ++y) {
      t.v[static_cast<std::size_t>(x * size + y)] = ((x & y) == 0) ? 1 : 0;
    }
  }
  return t;
}

namespace {

// Column sums s_y = sum_{x in rows} (-1)^{g(x,y)} mu(x,y), accumulated in
// increasing x. Both search routines share this association so their
// floating-point results match exactly.
std::vector<double> column_sums(const BooleanTable& g,
                                const InputDistribution& mu,
                                std::uint32_t rows) {
  std::vector<double> s(static_cast<std::size_t>(g.ny), 0.0);
  for (std::int64_t x = 0; x < g.nx; ++x) {
    if (!(rows & (1u << x))) continue;
    for (std::int64_t y = 0; y < g.ny; ++y) {
      const double m = mu(x, y);
      s[static_cast<std::size_t>(y)] += g(x, y) ? -m : m;
    }
  }
  return s;
}

void check_inputs(const BooleanTable& g, const InputDistribution& mu) {
  g.validate();
  mu.validate();
  if (g.nx != mu.nx || g.ny != mu.ny) {
    throw validation_error("table and distribution shapes differ");
  }
}

}  // namespace

double rectangle_value(const BooleanTable& g, const InputDistribution& mu,
                       std::uint32_t rows, std::uint32_t cols) {
  const auto s = column_sums(g, mu, rows);
  double total = 0.0;
  for (std::int64_t y = 0; y < g.ny; ++y) {
    if (cols & (1u << y)) total += s[static_cast<std::size_t>(y)];
  }
  return std::abs(total);
}

DiscResult disc_oracle(const BooleanTable& g, const InputDistribution& mu) {
  check_inputs(g, mu);
  if (g.nx + g.ny > 24) {
    throw validation_error("disc_oracle: nx + ny exceeds 24");
  }
  DiscResult best;  // empty rectangle contributes 0
  for (std::uint32_t rows = 0; rows < (1u << g.nx); ++rows) {
    const auto s = column_sums(g, mu, rows);
    for (std::uint32_t cols = 0; cols < (1u << g.ny); ++cols) {
      double total = 0.0;
      for (std::int64_t y = 0; y < g.ny; ++y) {
        if (cols & (1u << y)) total += s[static_cast<std::size_t>(y)];
      }
      const double val = std::abs(total);
      if (val > best.value) {
        best = {val, rows, cols};
      }
    }
  }
  return best;
}

DiscResult disc_fast(const BooleanTable& g, const InputDistribution& mu) {
  check_inputs(g, mu);
  if (g.nx > 24) throw validation_error("disc_fast: nx exceeds 24");
  DiscResult best;
  for (std::uint32_t rows = 0; rows < (1u << g.nx); ++rows) {
    const auto s = column_sums(g, mu, rows);
    double pos = 0.0, neg = 0.0;
    std::uint32_t pos_mask = 0, neg_mask = 0;
    for (std::int64_t y = 0; y < g.ny; ++y) {
      const double v = s[static_cast<std::size_t>(y)];
      if (v > 0.0) {
        pos += v;
        pos_mask |= 1u << y;
      } else if (v < 0.0) {
        neg += -v;
        neg_mask |= 1u << y;
      }
    }
    double val = pos;
    std::uint32_t cols = pos_mask;
    if (neg > pos || (neg == pos && neg_mask < pos_mask)) {
      val = neg;
      cols = neg_mask;
    }
    if (val > best.value) {
      best = {val, rows, cols};
    }
  }
  return best;
}

GdmResult gdm_delta(const BooleanTable& f, const InputDistribution& mu,
                    double delta) {
  check_inputs(f, mu);
  if (delta < 0.0 || delta > 1.0) {
    throw validation_error("gdm_delta: delta outside [0, 1]");
  }
  const std::int64_t cells = f.nx * f.ny;
  if (cells > 20) throw validation_error("gdm_delta: nx * ny exceeds 20");

  // Flip sets ordered by increasing size, then by mask. Exhaustive: no
  // sound pruning bound is available at these sizes, and exactness wins.
  std::vector<std::uint32_t> masks;
  masks.reserve(std::size_t{1} << cells);
  for (std::uint32_t m = 0; m < (1u << cells); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     const int pa = __builtin_popcount(a);
                     const int pb = __builtin_popcount(b);
                     return pa != pb ? pa < pb : a < b;
                   });

  GdmResult best;
  bool found = false;
  for (const auto mask : masks) {
    double flipped_mass = 0.0;
    for (std::int64_t c = 0; c < cells; ++c) {
      if (mask & (1u << c)) flipped_mass += mu.p[static_cast<std::size_t>(c)];
    }
    if (flipped_mass > delta + 1e-12) continue;
    BooleanTable g = f;
    for (std::int64_t c = 0; c < cells; ++c) {
      if (mask & (1u << c)) g.v[static_cast<std::size_t>(c)] ^= 1;
    }
    const DiscResult d = disc_fast(g, mu);
    const double val = std::log2(1.0 / d.value);
    if (!found || val > best.value) {
      best.value = val;
      best.witness_g = g;
      best.flips = mask;
      found = true;
    }
  }
  return best;
}

GdmSearchResult gdm_search(const BooleanTable& f, double delta,
                           double grid_step) {
  f.validate();
  if (!(grid_step > 0.0 && grid_step <= 0.5)) {
    throw validation_error("gdm_search: grid_step outside (0, 1/2]");
  }
  const auto n = static_cast<std::int64_t>(std::llround(1.0 / grid_step));
  if (std::abs(static_cast<double>(n) * grid_step - 1.0) > 1e-9) {
    throw validation_error("gdm_search: 1/grid_step is not integral");
  }
  const std::int64_t cells = f.nx * f.ny;
  {
    // crude feasibility guard on the grid size
    double points = 1.0;
    for (std::int64_t k = 1; k < cells; ++k) {
      points *= static_cast<double>(n + k) / static_cast<double>(k);
    }
    if (points > 2e6) {
      throw validation_error("gdm_search: grid too fine for table size");
    }
  }

  GdmSearchResult best;
  bool found = false;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(cells), 0);
  std::function<void(std::int64_t, std::int64_t)> rec =
      [&](std::int64_t cell, std::int64_t remaining) {
        if (cell == cells - 1) {
          counts[static_cast<std::size_t>(cell)] = remaining;
          InputDistribution mu = InputDistribution::zero(f.nx, f.ny);
          for (std::int64_t c = 0; c < cells; ++c) {
            mu.p[static_cast<std::size_t>(c)] =
                static_cast<double>(counts[static_cast<std::size_t>(c)]) /
                static_cast<double>(n);
          }
          const double val = gdm_delta(f, mu, delta).value;
          if (!found || val > best.value) {
            best.value = val;
            best.argmax = mu;
            found = true;
          }
          return;
        }
        for (std::int64_t k = 0; k <= remaining; ++k) {
          counts[static_cast<std::size_t>(cell)] = k;
          rec(cell + 1, remaining - k);
        }
      };
  rec(0, n);
  return best;
}

}  // namespace qic
