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

#include "qic/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace qic {

namespace {

std::int64_t dims_product(const std::vector<RegisterDecl>& regs) {
  std::int64_t d = 1;
  for (const auto& r : regs) d *= r.dim;
  return d;
}

// Ownership state used by both validate() and run().
struct Holdings {
  std::set<std::string> alice, bob;
  std::vector<std::string> comm;

  std::set<std::string>& of(Party p) {
    return p == Party::alice ? alice : bob;
  }
};

// Applies the label bookkeeping of one isometry. `message` names the output
// labels that fly to the other party (empty for the final isometry).
void advance_ownership(Holdings& h, Party actor, const Isometry& op,
                       const std::vector<std::string>& message, int round) {
  auto& mine = h.of(actor);
  std::set<std::string> available = mine;
  available.insert(h.comm.begin(), h.comm.end());

  for (const auto& r : op.in) {
    if (!available.count(r.label)) {
      throw validation_error("round " + std::to_string(round) +
                             ": isometry consumes register '" + r.label +
                             "' not held by " + party_name(actor));
    }
  }
  std::unordered_set<std::string> consumed;
  for (const auto& r : op.in) consumed.insert(r.label);
  // Untouched incoming message registers stay with the receiver.
  for (const auto& c : h.comm) {
    if (!consumed.count(c)) mine.insert(c);
  }
  for (const auto& r : op.in) mine.erase(r.label);
  h.comm.clear();

  std::unordered_set<std::string> outgoing(message.begin(), message.end());
  for (const auto& m : message) {
    bool found = false;
    for (const auto& r : op.out) found |= (r.label == m);
    if (!found) {
      throw validation_error("round " + std::to_string(round) +
                             ": message register '" + m +
                             "' is not produced by the round isometry");
    }
  }
  for (const auto& r : op.out) {
    if (mine.count(r.label) || h.of(other(actor)).count(r.label)) {
      throw validation_error("round " + std::to_string(round) +
                             ": output label '" + r.label +
                             "' collides with a held register");
    }
    if (!outgoing.count(r.label)) mine.insert(r.label);
  }
  h.comm = message;
}

Holdings initial_holdings(const ProtocolSpec& p) {
  Holdings h;
  for (const auto& r : p.a_in) h.alice.insert(r.label);
  for (const auto& l : p.t_a) h.alice.insert(l);
  for (const auto& r : p.b_in) h.bob.insert(r.label);
  for (const auto& l : p.t_b) h.bob.insert(l);
  return h;
}

std::vector<std::string> held_in_layout_order(const RegisterLayout& layout,
                                              const std::set<std::string>& s) {
  std::vector<std::string> out;
  for (const auto& r : layout.regs()) {
    if (s.count(r.label)) out.push_back(r.label);
  }
  return out;
}

}  // namespace

std::int64_t ProtocolSpec::x_size() const { return dims_product(a_in); }
std::int64_t ProtocolSpec::y_size() const { return dims_product(b_in); }

void ProtocolSpec::validate(const SimConfig& cfg) const {
  if (rounds < 1) throw validation_error("protocol needs at least one round");
  if (static_cast<int>(round_ops.size()) != rounds) {
    throw validation_error("round_ops size does not match rounds");
  }
  // Reserved purification labels.
  std::vector<std::string> all_labels;
  for (const auto& r : a_in) all_labels.push_back(r.label);
  for (const auto& r : b_in) all_labels.push_back(r.label);
  for (const auto& rs : round_ops) {
    for (const auto& r : rs.op.out) all_labels.push_back(r.label);
  }
  for (const auto& r : final_op.out) all_labels.push_back(r.label);
  for (const auto& l : all_labels) {
    for (const auto& reserved : purifier_labels()) {
      if (l == reserved) {
        throw validation_error("register label '" + l + "' is reserved");
      }
    }
  }

  // Prestate must live exactly on t_a ∪ t_b.
  prestate.validate(cfg);
  {
    std::set<std::string> pre_labels;
    for (const auto& r : prestate.layout.regs()) pre_labels.insert(r.label);
    std::set<std::string> declared(t_a.begin(), t_a.end());
    declared.insert(t_b.begin(), t_b.end());
    if (pre_labels != declared) {
      throw validation_error("prestate labels do not match t_a ∪ t_b");
    }
  }

  Holdings h = initial_holdings(*this);
  for (int i = 1; i <= rounds; ++i) {
    const RoundSpec& rs = round_ops[static_cast<std::size_t>(i - 1)];
    if (rs.sender != sender_of(i)) {
      throw validation_error("round " + std::to_string(i) +
                             ": sender breaks the alternation convention");
    }
    rs.op.validate(cfg);
    advance_ownership(h, rs.sender, rs.op, rs.comm, i);
  }
  final_op.validate(cfg);
  advance_ownership(h, final_party(), final_op, {}, rounds + 1);

  for (const auto& l : a_out) {
    if (!h.alice.count(l)) {
      throw validation_error("declared Alice output '" + l +
                             "' is not held by Alice at the end");
    }
  }
  for (const auto& l : b_out) {
    if (!h.bob.count(l)) {
      throw validation_error("declared Bob output '" + l +
                             "' is not held by Bob at the end");
    }
  }
}

TaskSpec TaskSpec::empty(std::int64_t nx, std::int64_t ny, std::int64_t nza,
                         std::int64_t nzb) {
  TaskSpec t;
  t.nx = nx;
  t.ny = ny;
  t.nza = nza;
  t.nzb = nzb;
  t.allowed.assign(static_cast<std::size_t>(nx * ny * nza * nzb), 0);
  return t;
}

TaskSpec TaskSpec::function(std::int64_t nx, std::int64_t ny, std::int64_t nz,
                            const std::vector<std::int64_t>& f_table) {
  TaskSpec t = TaskSpec::empty(nx, ny, nz, nz);
  for (std::int64_t x = 0; x < nx; ++x) {
    for (std::int64_t y = 0; y < ny; ++y) {
      const std::int64_t z = f_table[static_cast<std::size_t>(x * ny + y)];
      t.set(x, y, z, z);
    }
  }
  return t;
}

void TaskSpec::validate() const {
  for (std::int64_t x = 0; x < nx; ++x) {
    for (std::int64_t y = 0; y < ny; ++y) {
      bool any = false;
      for (std::int64_t za = 0; za < nza && !any; ++za) {
        for (std::int64_t zb = 0; zb < nzb && !any; ++zb) {
          any = ok(x, y, za, zb);
        }
      }
      if (!any) {
        throw validation_error("task has no allowed output for input (" +
                               std::to_string(x) + "," + std::to_string(y) +
                               ")");
      }
    }
  }
}

GlobalPureState embed_input(const InputDistribution& mu,
                            const std::vector<RegisterDecl>& a_in,
                            const std::vector<RegisterDecl>& b_in,
                            const SimConfig& cfg) {
  mu.validate(cfg);
  if (dims_product(a_in) != mu.nx || dims_product(b_in) != mu.ny) {
    throw validation_error(
        "embed_input: input registers do not match alphabet sizes");
  }
  std::vector<RegisterDecl> regs = a_in;
  regs.insert(regs.end(), b_in.begin(), b_in.end());
  const std::int64_t nr = mu.nx * mu.ny;
  regs.push_back({purifier_labels()[0], nr});
  regs.push_back({purifier_labels()[1], nr});

  GlobalPureState s;
  s.layout = RegisterLayout(std::move(regs));
  check_dim_cap(s.layout.total_dim(), cfg, "embed_input");
  s.amps = Vec::Zero(s.layout.total_dim());
  for (std::int64_t x = 0; x < mu.nx; ++x) {
    for (std::int64_t y = 0; y < mu.ny; ++y) {
      const double m = mu(x, y);
      if (m <= 0.0) continue;
      const std::int64_t xy = x * mu.ny + y;
      const std::int64_t idx = ((x * mu.ny + y) * nr + xy) * nr + xy;
      s.amps(idx) = std::sqrt(m);
    }
  }
  return s;
}

GlobalPureState embed_input(const InputDistribution& mu, const SimConfig& cfg) {
  return embed_input(mu, {{"A_in", mu.nx}}, {{"B_in", mu.ny}}, cfg);
}

Transcript run(const ProtocolSpec& p, const InputDistribution& mu,
               const SimConfig& cfg) {
  p.validate(cfg);
  GlobalPureState state = embed_input(mu, p.a_in, p.b_in, cfg);
  if (p.prestate.layout.size() > 0) {
    state = tensor(state, p.prestate);
  }
  check_dim_cap(state.layout.total_dim(), cfg, "run");

  Holdings h = initial_holdings(p);
  Transcript t;
  t.snapshots.reserve(static_cast<std::size_t>(p.rounds) + 1);
  for (int i = 1; i <= p.rounds + 1; ++i) {
    const bool last = (i == p.rounds + 1);
    const Isometry& op =
        last ? p.final_op : p.round_ops[static_cast<std::size_t>(i - 1)].op;
    const Party actor =
        last ? p.final_party() : p.round_ops[static_cast<std::size_t>(i - 1)].sender;
    const std::vector<std::string> message =
        last ? std::vector<std::string>{}
             : p.round_ops[static_cast<std::size_t>(i - 1)].comm;
    state = apply_isometry(state, op, cfg);
    check_dim_cap(state.layout.total_dim(), cfg, "run");
    advance_ownership(h, actor, op, message, i);

    Snapshot snap;
    snap.state = state;
    snap.alice = held_in_layout_order(state.layout, h.alice);
    snap.bob = held_in_layout_order(state.layout, h.bob);
    snap.comm = message;
    snap.sender = actor;
    t.snapshots.push_back(std::move(snap));
  }
  return t;
}

double qcc(const ProtocolSpec& p) {
  double total = 0.0;
  for (const auto& rs : p.round_ops) {
    for (const auto& m : rs.comm) {
      for (const auto& r : rs.op.out) {
        if (r.label == m) total += std::log2(static_cast<double>(r.dim));
      }
    }
  }
  return total;
}

QicReport qic(const ProtocolSpec& p, const InputDistribution& mu,
              const SimConfig& cfg) {
  Transcript t = run(p, mu, cfg);
  QicReport report;
  report.qcc = qcc(p);
  for (int i = 1; i <= p.rounds; ++i) {
    const Snapshot& snap = t.snapshots[static_cast<std::size_t>(i - 1)];
    const Party receiver = other(snap.sender);
    RoundCost rc;
    rc.round = i;
    rc.sender = snap.sender;
    if (!snap.comm.empty()) {
      const auto& cond =
          receiver == Party::alice ? snap.alice : snap.bob;
      rc.cqmi_contribution =
          0.5 * cqmi(snap.state, snap.comm, purifier_labels(), cond, cfg);
    }
    report.per_round.push_back(rc);
    report.qic_total += rc.cqmi_contribution;
  }
  if (!p.a_out.empty() || !p.b_out.empty()) {
    const std::int64_t nza =
        t.final_snapshot().state.layout.dim_of_group(p.a_out);
    const std::int64_t nzb =
        t.final_snapshot().state.layout.dim_of_group(p.b_out);
    report.outputs = output_table(t, p, nza, nzb);
  }
  return report;
}

QicReport qic(const ProtocolSpec& p, const InputDistribution& mu,
              const TaskSpec& task, const SimConfig& cfg) {
  QicReport report = qic(p, mu, cfg);
  if (report.outputs.has_value()) {
    double err = 0.0;
    const OutputTable& ot = *report.outputs;
    for (std::int64_t x = 0; x < ot.nx; ++x) {
      for (std::int64_t y = 0; y < ot.ny; ++y) {
        for (std::int64_t za = 0; za < ot.nza; ++za) {
          for (std::int64_t zb = 0; zb < ot.nzb; ++zb) {
            if (!task.ok(x, y, za, zb)) err += ot(x, y, za, zb);
          }
        }
      }
    }
    report.avg_error = err;
  }
  return report;
}

OutputTable output_table(const Transcript& t, const ProtocolSpec& p,
                         std::int64_t nza, std::int64_t nzb) {
  const GlobalPureState& state = t.final_snapshot().state;
  const std::int64_t nx = p.x_size();
  const std::int64_t ny = p.y_size();
  OutputTable ot;
  ot.nx = nx;
  ot.ny = ny;
  ot.nza = nza;
  ot.nzb = nzb;
  ot.prob.assign(static_cast<std::size_t>(nx * ny * nza * nzb), 0.0);

  // Regroup so (R1, a_out..., b_out...) are the least-significant digits.
  std::vector<std::string> group = {purifier_labels()[0]};
  group.insert(group.end(), p.a_out.begin(), p.a_out.end());
  group.insert(group.end(), p.b_out.begin(), p.b_out.end());
  const auto src = regroup_indices(state.layout, group);
  const std::int64_t dg = state.layout.dim_of_group(group);
  const std::int64_t de = state.layout.total_dim() / dg;
  for (std::int64_t e = 0; e < de; ++e) {
    for (std::int64_t g = 0; g < dg; ++g) {
      const double pr =
          std::norm(state.amps(src[static_cast<std::size_t>(e * dg + g)]));
      if (pr == 0.0) continue;
      const std::int64_t zb = g % nzb;
      const std::int64_t za = (g / nzb) % nza;
      const std::int64_t xy = g / (nza * nzb);
      ot.prob[static_cast<std::size_t>((xy * nza + za) * nzb + zb)] += pr;
    }
  }
  return ot;
}

double avg_error(const Transcript& t, const ProtocolSpec& p,
                 const TaskSpec& task) {
  if (p.a_out.empty() && p.b_out.empty()) {
    throw validation_error("avg_error: protocol declares no output registers");
  }
  const auto& layout = t.final_snapshot().state.layout;
  OutputTable ot = output_table(t, p, layout.dim_of_group(p.a_out),
                                layout.dim_of_group(p.b_out));
  if (ot.nx != task.nx || ot.ny != task.ny || ot.nza != task.nza ||
      ot.nzb != task.nzb) {
    throw validation_error("avg_error: task shape does not match protocol");
  }
  double err = 0.0;
  for (std::int64_t x = 0; x < ot.nx; ++x) {
    for (std::int64_t y = 0; y < ot.ny; ++y) {
      for (std::int64_t za = 0; za < ot.nza; ++za) {
        for (std::int64_t zb = 0; zb < ot.nzb; ++zb) {
          if (!task.ok(x, y, za, zb)) err += ot(x, y, za, zb);
        }
      }
    }
  }
  return err;
}

double avg_error(const ProtocolSpec& p, const InputDistribution& mu,
                 const TaskSpec& task, const SimConfig& cfg) {
  Transcript t = run(p, mu, cfg);
  return avg_error(t, p, task);
}

double worst_case_error(const ProtocolSpec& p, const TaskSpec& task,
                        const SimConfig& cfg) {
  double worst = 0.0;
  for (std::int64_t x = 0; x < p.x_size(); ++x) {
    for (std::int64_t y = 0; y < p.y_size(); ++y) {
      const auto mu =
          InputDistribution::point_mass(p.x_size(), p.y_size(), x, y);
      worst = std::max(worst, avg_error(p, mu, task, cfg));
    }
  }
  return worst;
}

}  // namespace qic
