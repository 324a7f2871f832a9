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

#include <string>
#include <vector>

#include "qic/linalg.hpp"

namespace qic {

// All entropic quantities are in bits (log base 2).

/// Von Neumann entropy of the reduced state on `labels`.
double entropy(const GlobalPureState& state,
               const std::vector<std::string>& labels,
               const SimConfig& cfg = {});
double entropy(const DensityOperator& rho,
               const std::vector<std::string>& labels,
               const SimConfig& cfg = {});
/// Entropy of the full density operator.
double entropy(const DensityOperator& rho, const SimConfig& cfg = {});

/// H(A|B) = H(AB) - H(B). May be negative for entangled states.
double cond_entropy(const GlobalPureState& state,
                    const std::vector<std::string>& a_labels,
                    const std::vector<std::string>& b_labels,
                    const SimConfig& cfg = {});

/// I(A;B|C) = H(AC) + H(BC) - H(ABC) - H(C). `c_labels` may be empty,
/// giving the plain mutual information.
double cqmi(const GlobalPureState& state,
            const std::vector<std::string>& a_labels,
            const std::vector<std::string>& b_labels,
            const std::vector<std::string>& c_labels = {},
            const SimConfig& cfg = {});
double cqmi(const DensityOperator& rho,
            const std::vector<std::string>& a_labels,
            const std::vector<std::string>& b_labels,
            const std::vector<std::string>& c_labels = {},
            const SimConfig& cfg = {});

/// -p log2 p - (1-p) log2 (1-p), with the endpoint convention H(0)=H(1)=0.
double binary_entropy(double p);

/// Shannon entropy of a probability vector (entries clamped at 0).
double shannon_entropy(const std::vector<double>& p);

}  // namespace qic
