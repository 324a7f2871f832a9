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

#include <functional>
#include <string>

#include "qic/protocol.hpp"

namespace qic {

/// Extends `v` to act on all registers of `layout` (identity on the ones
/// it does not address). The result consumes `layout` in order and emits
/// the untouched registers (layout order) followed by v's out registers.
Isometry extend_isometry(const Isometry& v, const RegisterLayout& layout);

/// Runs `extra` after `base` (extra.in must be a subset of base.out).
Isometry compose_after(const Isometry& base, const Isometry& extra);

/// Renames every register label through `f`.
ProtocolSpec relabel_protocol(const ProtocolSpec& p,
                              const std::function<std::string(
                                  const std::string&)>& f);
ProtocolSpec add_label_suffix(const ProtocolSpec& p, const std::string& s);

/// Extends a protocol to `rounds` message rounds by letting the parties
/// exchange fresh one-dimensional registers once the real protocol has
/// finished. QIC and QCC are unaffected by the padding.
ProtocolSpec pad_to_rounds(const ProtocolSpec& p, int rounds);

/// Runs p1 and p2 side by side (labels auto-renamed with "#1"/"#2"); the
/// shorter protocol is padded. The result implements the product channel
/// with max(r1, r2) rounds.
ProtocolSpec parallel(const ProtocolSpec& p1, const ProtocolSpec& p2);

/// Publicly mixed protocol: a pre-shared selector state
/// sqrt(p)|11> + sqrt(1-p)|22> picks which of the two protocols runs, via
/// selector-controlled round isometries over padded common registers.
/// Requires identical input and output signatures.
ProtocolSpec convex_mix(double p, const ProtocolSpec& p1,
                        const ProtocolSpec& p2);

/// n-fold parallel repetition of p, coordinate-wise inputs and outputs.
ProtocolSpec repeat_n(const ProtocolSpec& p, int n);

/// n-fold product distribution mu^(x)n matching repeat_n's input layout.
InputDistribution power_dist(const InputDistribution& mu, int n);

struct SupResult {
  double value = 0.0;
  InputDistribution argmax;
};

/// Exhaustive grid search of QIC over the probability simplex on X x Y
/// with resolution `grid_step` (1/grid_step must be an integer), restricted
/// to grid points satisfying `constraint`. Scan order is lexicographic over
/// the row-major count vectors; ties keep the first maximizer.
SupResult qic_sup_over_prior(
    const ProtocolSpec& p, double grid_step,
    const std::function<bool(const InputDistribution&)>& constraint,
    const SimConfig& cfg = {});

}  // namespace qic
