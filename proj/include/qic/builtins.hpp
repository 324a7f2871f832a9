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

#include "qic/compose.hpp"
#include "qic/protocol.hpp"

namespace qic {

/// Parameters of the low-information AND protocol: 4r single-qubit
/// messages with rotation angle theta = pi / (8 r).
struct AndProtocolParams {
  int r = 1;

  double theta() const;
};

/// The 4r-message ping-pong protocol for AND. Alice reflects the qubit
/// about cos(theta)|0> + sin(theta)|1> when x = 1; Bob flips the sign of
/// |1> when y = 1. In the closing round Bob applies his phase once more,
/// coherently copies the qubit into his output register OB, and sends the
/// copy to Alice, who keeps it as OA. Exact for AND on every input.
ProtocolSpec build_and_protocol(const AndProtocolParams& params);

enum class AndBranch { y_equals_0, y_equals_1 };

/// Closed-form prediction for the conditional entropy of the qubit in
/// flight after message i (i odd), for the prior with mass w on (1,1):
///  - y_equals_1: H of the smaller eigenvalue of the mixture of |psi^{0,1}>
///    and |psi^{1,1}> with weights (1-w)/(1+2w), 3w/(1+2w).
///  - y_equals_0: H(sin^2 theta) when i = 1 mod 4, 0 when i = 3 mod 4
///    (independent of w; the conditional mixture weights stay 1/2, 1/2).
double and_round_entropy(int message_index, const AndProtocolParams& params,
                         double w, AndBranch branch);

/// The AND input prior (1/3, 1/3, 1/3, 0).
InputDistribution mu_star();
/// Prior ((1-w)/3, (1-w)/3, (1-w)/3, w).
InputDistribution mu_with_mass(double w);

TaskSpec and_task();
/// DISJ_n: outputs 1 iff no coordinate has x_i = y_i = 1. Inputs are the
/// row-major n-bit strings produced by repeat_n's input layout.
TaskSpec disj_task(int n);

/// Alice coherently copies x to Bob; Bob computes the (functional) task
/// and sends the answer back. Worst-case error 0.
ProtocolSpec build_classical_exchange(const TaskSpec& task);

/// Parties exchange freshly prepared |0> registers of the given dimension;
/// QIC is 0 on every input distribution.
ProtocolSpec build_dummy(int rounds, std::int64_t dim, std::int64_t nx = 2,
                         std::int64_t ny = 2);

/// n-fold repetition of the AND protocol with a classical post-processing
/// step computing the DISJ answer (1 iff every coordinate's AND output is
/// 0) into fresh output registers on both sides.
ProtocolSpec build_disj_from_and(const AndProtocolParams& params, int n);

}  // namespace qic
