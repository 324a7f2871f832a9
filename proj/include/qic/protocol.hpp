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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qic/distribution.hpp"
#include "qic/info.hpp"
#include "qic/linalg.hpp"

namespace qic {

enum class Party { alice, bob };

inline Party other(Party p) {
  return p == Party::alice ? Party::bob : Party::alice;
}
inline const char* party_name(Party p) { return p == Party::alice ? "A" : "B"; }

/// Labels of the canonical purification registers created by embed_input.
/// Protocol register names must avoid them.
inline const std::vector<std::string>& purifier_labels() {
  static const std::vector<std::string> r = {"R1", "R2"};
  return r;
}

/// One message round: the sender consumes a subset of its current holding
/// (plus the incoming message, if it chooses) through `op`, and the labels
/// in `comm` (a subset of op.out) fly to the other party. Registers the
/// sender holds but does not list in op.in are carried along untouched.
struct RoundSpec {
  Party sender = Party::alice;
  Isometry op;
  std::vector<std::string> comm;
};

/// An r-round interactive protocol: Alice sends messages 1, 3, ..., Bob
/// sends messages 2, 4, ..., and the receiver of message r applies
/// `final_op` (which emits no message).
struct ProtocolSpec {
  int rounds = 0;
  std::vector<RegisterDecl> a_in, b_in;    // classical input registers
  GlobalPureState prestate;                // pure state on t_a ∪ t_b labels
  std::vector<std::string> t_a, t_b;       // pre-shared entanglement split
  std::vector<RoundSpec> round_ops;        // size == rounds
  Isometry final_op;
  std::vector<std::string> a_out, b_out;   // declared output registers

  std::int64_t x_size() const;
  std::int64_t y_size() const;
  Party sender_of(int round) const {
    return (round % 2 == 1) ? Party::alice : Party::bob;
  }
  Party final_party() const { return other(sender_of(rounds)); }

  /// Structural validation: alternation, ownership flow, isometry
  /// tolerances, output registers present at the end.
  void validate(const SimConfig& cfg = {}) const;
};

/// Per-round snapshot of the global state after U_i, with the role
/// partition current at that point.
struct Snapshot {
  GlobalPureState state;
  std::vector<std::string> alice;  // labels held by Alice
  std::vector<std::string> bob;
  std::vector<std::string> comm;   // message in flight (empty after U_{r+1})
  Party sender = Party::alice;     // who acted to produce this snapshot
};

/// Snapshot sequence of length rounds + 1 (one per isometry application).
struct Transcript {
  std::vector<Snapshot> snapshots;

  const Snapshot& final_snapshot() const { return snapshots.back(); }
};

/// Relation T ⊆ X x Y x Z_A x Z_B; for functions z_A = z_B = f(x, y).
struct TaskSpec {
  std::int64_t nx = 0, ny = 0, nza = 0, nzb = 0;
  std::vector<char> allowed;  // row-major over (x, y, z_A, z_B)

  bool ok(std::int64_t x, std::int64_t y, std::int64_t za,
          std::int64_t zb) const {
    return allowed[static_cast<std::size_t>(
               ((x * ny + y) * nza + za) * nzb + zb)] != 0;
  }
  void set(std::int64_t x, std::int64_t y, std::int64_t za, std::int64_t zb,
           bool v = true) {
    allowed[static_cast<std::size_t>(((x * ny + y) * nza + za) * nzb + zb)] =
        v ? 1 : 0;
  }
  static TaskSpec empty(std::int64_t nx, std::int64_t ny, std::int64_t nza,
                        std::int64_t nzb);
  /// Function task: z_A = z_B = f(x, y).
  static TaskSpec function(std::int64_t nx, std::int64_t ny, std::int64_t nz,
                           const std::vector<std::int64_t>& f_table);
  void validate() const;  // every (x, y) must have some allowed output
};

struct RoundCost {
  int round = 0;
  Party sender = Party::alice;
  double cqmi_contribution = 0.0;  // already halved
};

/// Joint output statistics: probability of each (x, y, z_A, z_B) cell
/// under measurement of R1 and the output registers.
struct OutputTable {
  std::int64_t nx = 0, ny = 0, nza = 0, nzb = 0;
  std::vector<double> prob;  // row-major over (x, y, z_A, z_B)

  double operator()(std::int64_t x, std::int64_t y, std::int64_t za,
                    std::int64_t zb) const {
    return prob[static_cast<std::size_t>(((x * ny + y) * nza + za) * nzb +
                                         zb)];
  }
};

struct QicReport {
  std::vector<RoundCost> per_round;
  double qic_total = 0.0;
  double qcc = 0.0;
  std::optional<double> avg_error;
  std::optional<OutputTable> outputs;
};

/// The canonical purified embedding of a classical input distribution:
///   sum_{x,y} sqrt(mu(x,y)) |x>|y>|xy>^{R1}|xy>^{R2},
/// with the x digits spread row-major over the registers in `a_in` and the
/// y digits over `b_in`. R1 and R2 each have dimension |X|*|Y| and index
/// value x * |Y| + y.
GlobalPureState embed_input(const InputDistribution& mu,
                            const std::vector<RegisterDecl>& a_in,
                            const std::vector<RegisterDecl>& b_in,
                            const SimConfig& cfg = {});

/// Single-register convenience form on labels A_in, B_in.
GlobalPureState embed_input(const InputDistribution& mu,
                            const SimConfig& cfg = {});

Transcript run(const ProtocolSpec& p, const InputDistribution& mu,
               const SimConfig& cfg = {});

/// Quantum communication cost: sum over message rounds of log2 of the
/// message register dimensions. The final isometry contributes nothing.
double qcc(const ProtocolSpec& p);

/// Quantum information cost report on `mu`. Each round contributes
/// (1/2) I(C_i ; R | holdings of the receiving party), evaluated on the
/// snapshot after U_i with R = {R1, R2}.
QicReport qic(const ProtocolSpec& p, const InputDistribution& mu,
              const SimConfig& cfg = {});
QicReport qic(const ProtocolSpec& p, const InputDistribution& mu,
              const TaskSpec& task, const SimConfig& cfg = {});

/// Measures R1, A_out, B_out in the computational basis of the final
/// snapshot and returns Pr[(x, y, z_A, z_B) not in T].
double avg_error(const Transcript& t, const ProtocolSpec& p,
                 const TaskSpec& task);
double avg_error(const ProtocolSpec& p, const InputDistribution& mu,
                 const TaskSpec& task, const SimConfig& cfg = {});

OutputTable output_table(const Transcript& t, const ProtocolSpec& p,
                         std::int64_t nza, std::int64_t nzb);

/// max over point-mass input distributions of avg_error.
double worst_case_error(const ProtocolSpec& p, const TaskSpec& task,
                        const SimConfig& cfg = {});

}  // namespace qic
