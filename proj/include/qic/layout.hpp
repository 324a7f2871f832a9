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

/// A named register with its Hilbert-space dimension.
struct RegisterDecl {
  std::string label;
  std::int64_t dim = 1;

  friend bool operator==(const RegisterDecl&, const RegisterDecl&) = default;
};

/// Ordered list of labeled finite-dimensional subsystems.
///
/// Basis convention: the computational-basis index of the joint space is
/// row-major with the FIRST label most significant, i.e.
///   index = (((d_0 * dim_1) + d_1) * dim_2 + d_2) * ...
/// where d_k is the basis digit of the k-th label.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  explicit RegisterLayout(std::vector<RegisterDecl> regs);

  static RegisterLayout concat(const RegisterLayout& a,
                               const RegisterLayout& b);

  std::size_t size() const { return regs_.size(); }
  const std::vector<RegisterDecl>& regs() const { return regs_; }
  const RegisterDecl& at(std::size_t k) const { return regs_[k]; }

  bool has(const std::string& label) const;
  /// Position of `label`; throws validation_error if absent.
  std::size_t pos(const std::string& label) const;
  std::int64_t dim_of(const std::string& label) const;
  std::int64_t total_dim() const { return total_; }

  /// Product of dims of the given labels (each must exist).
  std::int64_t dim_of_group(const std::vector<std::string>& labels) const;

  /// Labels not in `labels`, in layout order.
  std::vector<std::string> complement(
      const std::vector<std::string>& labels) const;

  /// The subset of `labels` reordered to layout order.
  std::vector<std::string> in_layout_order(
      const std::vector<std::string>& labels) const;

  std::vector<std::string> labels() const;

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) =
      default;

 private:
  std::vector<RegisterDecl> regs_;
  std::int64_t total_ = 1;
};

/// Index permutation that moves `group` (in the given order) to the
/// least-significant digits of the layout, keeping the remaining labels in
/// layout order as the most-significant digits. Entry [e * group_dim + g]
/// holds the source index in the original layout.
std::vector<std::int64_t> regroup_indices(const RegisterLayout& layout,
                                          const std::vector<std::string>& group);

}  // namespace qic
