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

#include "qic/compose.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qic {

Isometry extend_isometry(const Isometry& v, const RegisterLayout& layout) {
  std::vector<std::string> in_labels;
  for (const auto& r : v.in) {
    if (layout.dim_of(r.label) != r.dim) {
      throw validation_error("extend_isometry: dim mismatch on '" + r.label +
                             "'");
    }
    in_labels.push_back(r.label);
  }
  const auto rest = layout.complement(in_labels);
  const auto src = regroup_indices(layout, in_labels);
  const std::int64_t di = v.in_dim();
  const std::int64_t de = layout.total_dim() / di;
  const std::int64_t dout = v.out_dim();

  Isometry ext;
  ext.in = layout.regs();
  for (const auto& l : rest) ext.out.push_back({l, layout.dim_of(l)});
  ext.out.insert(ext.out.end(), v.out.begin(), v.out.end());
  ext.m = Mat::Zero(de * dout, layout.total_dim());
  for (std::int64_t e = 0; e < de; ++e) {
    for (std::int64_t i = 0; i < di; ++i) {
      const auto col = src[static_cast<std::size_t>(e * di + i)];
      for (std::int64_t o = 0; o < dout; ++o) {
        ext.m(e * dout + o, col) = v.m(o, i);
      }
    }
  }
  return ext;
}

Isometry compose_after(const Isometry& base, const Isometry& extra) {
  RegisterLayout mid(base.out);
  Isometry ext = extend_isometry(extra, mid);
  Isometry out;
  out.in = base.in;
  out.out = ext.out;
  out.m = ext.m * base.m;
  return out;
}

namespace {

Isometry reorder_out(const Isometry& v,
                     const std::vector<std::string>& target_order) {
  RegisterLayout out_layout(v.out);
  const auto src = regroup_indices(out_layout, target_order);
  Isometry r;
  r.in = v.in;
  for (const auto& l : target_order) r.out.push_back({l, out_layout.dim_of(l)});
  r.m = Mat(v.m.rows(), v.m.cols());
  for (std::int64_t t = 0; t < r.m.rows(); ++t) {
    r.m.row(t) = v.m.row(src[static_cast<std::size_t>(t)]);
  }
  return r;
}

}  // namespace

ProtocolSpec relabel_protocol(
    const ProtocolSpec& p,
    const std::function<std::string(const std::string&)>& f) {
  ProtocolSpec q = p;
  auto map_decls = [&](std::vector<RegisterDecl>& regs) {
    for (auto& r : regs) r.label = f(r.label);
  };
  auto map_labels = [&](std::vector<std::string>& ls) {
    for (auto& l : ls) l = f(l);
  };
  map_decls(q.a_in);
  map_decls(q.b_in);
  map_labels(q.t_a);
  map_labels(q.t_b);
  map_labels(q.a_out);
  map_labels(q.b_out);
  {
    std::vector<RegisterDecl> regs = q.prestate.layout.regs();
    map_decls(regs);
    q.prestate.layout = RegisterLayout(std::move(regs));
  }
  for (auto& rs : q.round_ops) {
    map_decls(rs.op.in);
    map_decls(rs.op.out);
    map_labels(rs.comm);
  }
  map_decls(q.final_op.in);
  map_decls(q.final_op.out);
  return q;
}

ProtocolSpec add_label_suffix(const ProtocolSpec& p, const std::string& s) {
  return relabel_protocol(p, [&](const std::string& l) { return l + s; });
}

ProtocolSpec pad_to_rounds(const ProtocolSpec& p, int rounds) {
  if (rounds < p.rounds) {
    throw validation_error("pad_to_rounds: cannot shrink a protocol");
  }
  if (rounds == p.rounds) return p;
  ProtocolSpec q = p;
  q.rounds = rounds;
  for (int i = p.rounds + 1; i <= rounds; ++i) {
    const std::string pad = "_pad" + std::to_string(i);
    RoundSpec rs;
    rs.sender = q.sender_of(i);
    if (i == p.rounds + 1) {
      // The original closing isometry moves here; its party is the sender
      // of the first padded round by alternation.
      rs.op = p.final_op;
      rs.op.out.push_back({pad, 1});
    } else {
      rs.op.in = {};
      rs.op.out = {{pad, 1}};
      rs.op.m = Mat::Ones(1, 1);
    }
    rs.comm = {pad};
    q.round_ops.push_back(rs);
  }
  q.final_op = identity_isometry({});
  return q;
}

ProtocolSpec parallel(const ProtocolSpec& p1, const ProtocolSpec& p2) {
  ProtocolSpec q1 = add_label_suffix(p1, "#1");
  ProtocolSpec q2 = add_label_suffix(p2, "#2");
  const int r = std::max(q1.rounds, q2.rounds);
  q1 = pad_to_rounds(q1, r);
  q2 = pad_to_rounds(q2, r);

  ProtocolSpec q;
  q.rounds = r;
  q.a_in = q1.a_in;
  q.a_in.insert(q.a_in.end(), q2.a_in.begin(), q2.a_in.end());
  q.b_in = q1.b_in;
  q.b_in.insert(q.b_in.end(), q2.b_in.begin(), q2.b_in.end());
  q.t_a = q1.t_a;
  q.t_a.insert(q.t_a.end(), q2.t_a.begin(), q2.t_a.end());
  q.t_b = q1.t_b;
  q.t_b.insert(q.t_b.end(), q2.t_b.begin(), q2.t_b.end());
  q.prestate = tensor(q1.prestate, q2.prestate);
  for (int i = 0; i < r; ++i) {
    RoundSpec rs;
    rs.sender = q1.round_ops[static_cast<std::size_t>(i)].sender;
    rs.op = tensor_isometry(q1.round_ops[static_cast<std::size_t>(i)].op,
                            q2.round_ops[static_cast<std::size_t>(i)].op);
    rs.comm = q1.round_ops[static_cast<std::size_t>(i)].comm;
    rs.comm.insert(rs.comm.end(),
                   q2.round_ops[static_cast<std::size_t>(i)].comm.begin(),
                   q2.round_ops[static_cast<std::size_t>(i)].comm.end());
    q.round_ops.push_back(std::move(rs));
  }
  q.final_op = tensor_isometry(q1.final_op, q2.final_op);
  q.a_out = q1.a_out;
  q.a_out.insert(q.a_out.end(), q2.a_out.begin(), q2.a_out.end());
  q.b_out = q1.b_out;
  q.b_out.insert(q.b_out.end(), q2.b_out.begin(), q2.b_out.end());
  return q;
}

// ---------------------------------------------------------------------------
// Convex mixing

namespace {

// One isometry of a protocol rewritten in strict alternating form: the
// actor consumes [shared inputs, entanglement] at its first action and its
// flattened memory afterwards (plus the incoming message), and emits
// [outputs at its last action] ⊗ [flattened memory] ⊗ [message].
struct StrictAction {
  Party actor = Party::alice;
  bool first = false;       // the actor's first action (inputs + T consumed)
  bool emits_outs = false;  // the actor's last action with declared outputs
  std::vector<std::int64_t> in_factors;
  std::vector<std::int64_t> out_factors;
  std::int64_t outs_dim = 1;
  std::int64_t mem_out = 1;
  std::int64_t msg_out = 1;
  Mat m;
};

struct StrictProtocol {
  int rounds = 0;
  std::int64_t ta_dim = 1, tb_dim = 1;
  Vec prestate;                       // over (t_a, t_b), row-major
  std::vector<StrictAction> actions;  // rounds + 1 entries
};

StrictProtocol strictify(const ProtocolSpec& p, const SimConfig& cfg) {
  p.validate(cfg);
  StrictProtocol s;
  s.rounds = p.rounds;

  std::vector<RegisterDecl> ta_regs, tb_regs;
  for (const auto& l : p.t_a) {
    ta_regs.push_back({l, p.prestate.layout.dim_of(l)});
    s.ta_dim *= ta_regs.back().dim;
  }
  for (const auto& l : p.t_b) {
    tb_regs.push_back({l, p.prestate.layout.dim_of(l)});
    s.tb_dim *= tb_regs.back().dim;
  }
  if (p.prestate.layout.size() == 0) {
    s.prestate = Vec::Ones(1);
  } else {
    std::vector<std::string> pre_order = p.t_a;
    pre_order.insert(pre_order.end(), p.t_b.begin(), p.t_b.end());
    const auto perm = regroup_indices(p.prestate.layout, pre_order);
    s.prestate = Vec(p.prestate.amps.size());
    for (std::int64_t t = 0; t < s.prestate.size(); ++t) {
      s.prestate(t) = p.prestate.amps(perm[static_cast<std::size_t>(t)]);
    }
  }

  std::vector<RegisterDecl> mem_a = p.a_in, mem_b = p.b_in;
  mem_a.insert(mem_a.end(), ta_regs.begin(), ta_regs.end());
  mem_b.insert(mem_b.end(), tb_regs.begin(), tb_regs.end());
  std::vector<RegisterDecl> msg;

  auto last_action_of = [&](Party who) {
    if (p.final_party() == who) return p.rounds + 1;
    return (p.sender_of(p.rounds) == who) ? p.rounds : p.rounds - 1;
  };
  bool alice_acted = false, bob_acted = false;

  for (int i = 1; i <= p.rounds + 1; ++i) {
    const bool last = (i == p.rounds + 1);
    const Isometry& op =
        last ? p.final_op : p.round_ops[static_cast<std::size_t>(i - 1)].op;
    const Party actor = last ? p.final_party() : p.sender_of(i);
    const std::vector<std::string> comm =
        last ? std::vector<std::string>{}
             : p.round_ops[static_cast<std::size_t>(i - 1)].comm;

    auto& mem = (actor == Party::alice) ? mem_a : mem_b;
    bool& acted = (actor == Party::alice) ? alice_acted : bob_acted;
    std::vector<RegisterDecl> available = mem;
    available.insert(available.end(), msg.begin(), msg.end());

    StrictAction act;
    act.actor = actor;
    act.first = !acted;
    acted = true;
    std::int64_t msg_in = 1;
    for (const auto& r : msg) msg_in *= r.dim;
    if (act.first) {
      const auto& ins = (actor == Party::alice) ? p.a_in : p.b_in;
      for (const auto& r : ins) act.in_factors.push_back(r.dim);
      act.in_factors.push_back(actor == Party::alice ? s.ta_dim : s.tb_dim);
    } else {
      std::int64_t mem_in = 1;
      for (const auto& r : mem) mem_in *= r.dim;
      act.in_factors.push_back(mem_in);
    }
    if (i > 1) act.in_factors.push_back(msg_in);

    Isometry ext = extend_isometry(op, RegisterLayout(available));

    const std::vector<std::string>& outs =
        (actor == Party::alice) ? p.a_out : p.b_out;
    act.emits_outs = (i == last_action_of(actor)) && !outs.empty();
    std::set<std::string> comm_set(comm.begin(), comm.end());
    std::set<std::string> outs_set;
    if (act.emits_outs) outs_set.insert(outs.begin(), outs.end());

    RegisterLayout ext_out_layout(ext.out);
    std::vector<std::string> target;
    if (act.emits_outs) target.insert(target.end(), outs.begin(), outs.end());
    std::vector<RegisterDecl> new_mem, new_msg;
    for (const auto& r : ext.out) {
      if (comm_set.count(r.label) || outs_set.count(r.label)) continue;
      new_mem.push_back(r);
    }
    for (const auto& r : new_mem) target.push_back(r.label);
    for (const auto& c : comm) {
      target.push_back(c);
      new_msg.push_back({c, ext_out_layout.dim_of(c)});
    }
    Isometry ordered = reorder_out(ext, target);

    if (act.emits_outs) {
      for (const auto& l : outs) act.outs_dim *= ext_out_layout.dim_of(l);
    }
    for (const auto& r : new_mem) act.mem_out *= r.dim;
    for (const auto& r : new_msg) act.msg_out *= r.dim;
    if (act.emits_outs) act.out_factors.push_back(act.outs_dim);
    act.out_factors.push_back(act.mem_out);
    if (!last) act.out_factors.push_back(act.msg_out);
    act.m = std::move(ordered.m);

    mem = new_mem;
    msg = new_msg;
    s.actions.push_back(std::move(act));
  }
  return s;
}

std::int64_t product(const std::vector<std::int64_t>& v) {
  std::int64_t d = 1;
  for (auto x : v) d *= x;
  return d;
}

// Digit-wise index remap from factor dims `src` into padded dims `dst`.
std::int64_t remap_index(std::int64_t i, const std::vector<std::int64_t>& src,
                         const std::vector<std::int64_t>& dst) {
  std::int64_t out = 0;
  std::int64_t sstride = 1, rem = i;
  for (std::size_t k = src.size(); k-- > 0;) {
    sstride = src[k];
    const std::int64_t digit = rem % sstride;
    rem /= sstride;
    std::int64_t dstride = 1;
    for (std::size_t j = k + 1; j < dst.size(); ++j) dstride *= dst[j];
    out += digit * dstride;
  }
  return out;
}

// Embeds an isometry over factored spaces into padded factor spaces and
// completes the unfilled input columns so the result stays an isometry.
Mat embed_and_complete(const Mat& m, const std::vector<std::int64_t>& in_src,
                       const std::vector<std::int64_t>& in_dst,
                       const std::vector<std::int64_t>& out_src,
                       const std::vector<std::int64_t>& out_dst) {
  const std::int64_t a = product(in_src), ap = product(in_dst);
  const std::int64_t b = product(out_src), bp = product(out_dst);
  Mat big = Mat::Zero(bp, ap);
  std::vector<char> filled(static_cast<std::size_t>(ap), 0);
  for (std::int64_t c = 0; c < a; ++c) {
    const std::int64_t cc = remap_index(c, in_src, in_dst);
    filled[static_cast<std::size_t>(cc)] = 1;
    for (std::int64_t r = 0; r < b; ++r) {
      if (m(r, c) != cx(0.0, 0.0)) {
        big(remap_index(r, out_src, out_dst), cc) = m(r, c);
      }
    }
  }
  std::int64_t probe = 0;
  for (std::int64_t c = 0; c < ap; ++c) {
    if (filled[static_cast<std::size_t>(c)]) continue;
    while (true) {
      if (probe >= bp) {
        throw validation_error("embed_and_complete: cannot complete isometry");
      }
      Vec v = Vec::Zero(bp);
      v(probe++) = 1.0;
      for (std::int64_t c2 = 0; c2 < ap; ++c2) {
        if (c2 < c || filled[static_cast<std::size_t>(c2)]) {
          v -= big.col(c2).dot(v) * big.col(c2);
        }
      }
      const double n = v.norm();
      if (n > 0.5) {
        big.col(c) = v / n;
        break;
      }
    }
  }
  return big;
}

}  // namespace

ProtocolSpec convex_mix(double p, const ProtocolSpec& p1,
                        const ProtocolSpec& p2) {
  if (p < 0.0 || p > 1.0) {
    throw validation_error("convex_mix: weight outside [0, 1]");
  }
  if (p1.a_in != p2.a_in || p1.b_in != p2.b_in || p1.a_out != p2.a_out ||
      p1.b_out != p2.b_out) {
    throw validation_error("convex_mix: input/output signatures differ");
  }
  for (const auto* regs : {&p1.a_in, &p1.b_in}) {
    for (const auto& rg : *regs) {
      if (rg.label.rfind("_mix", 0) == 0) {
        throw validation_error(
            "convex_mix: register names may not start with '_mix'");
      }
    }
  }
  const int r = std::max(p1.rounds, p2.rounds);
  const SimConfig cfg;
  const StrictProtocol s1 = strictify(pad_to_rounds(p1, r), cfg);
  const StrictProtocol s2 = strictify(pad_to_rounds(p2, r), cfg);

  // Output register dims, shared across branches (signature-checked above).
  auto output_decl = [&](const std::string& lab) -> RegisterDecl {
    for (const auto& rs : p1.round_ops) {
      for (const auto& rg : rs.op.out) {
        if (rg.label == lab) return rg;
      }
    }
    for (const auto& rg : p1.final_op.out) {
      if (rg.label == lab) return rg;
    }
    throw validation_error("convex_mix: cannot resolve output '" + lab + "'");
  };

  ProtocolSpec q;
  q.rounds = r;
  q.a_in = p1.a_in;
  q.b_in = p1.b_in;
  q.a_out = p1.a_out;
  q.b_out = p1.b_out;

  const std::int64_t ta = std::max(s1.ta_dim, s2.ta_dim);
  const std::int64_t tb = std::max(s1.tb_dim, s2.tb_dim);
  q.t_a = {"_mixSelA"};
  q.t_b = {"_mixSelB"};
  {
    std::vector<RegisterDecl> regs = {{"_mixSelA", 2}, {"_mixSelB", 2}};
    if (ta > 1) {
      q.t_a.push_back("_mixTA");
      regs.push_back({"_mixTA", ta});
    }
    if (tb > 1) {
      q.t_b.push_back("_mixTB");
      regs.push_back({"_mixTB", tb});
    }
    GlobalPureState pre;
    pre.layout = RegisterLayout(regs);
    pre.amps = Vec::Zero(pre.layout.total_dim());
    const double w[2] = {std::sqrt(p), std::sqrt(1.0 - p)};
    const StrictProtocol* branches[2] = {&s1, &s2};
    for (int s = 0; s < 2; ++s) {
      const StrictProtocol& br = *branches[s];
      for (std::int64_t ia = 0; ia < br.ta_dim; ++ia) {
        for (std::int64_t ib = 0; ib < br.tb_dim; ++ib) {
          pre.amps(((s * 2 + s) * ta + ia) * tb + ib) +=
              w[s] * br.prestate(ia * br.tb_dim + ib);
        }
      }
    }
    q.prestate = std::move(pre);
  }

  std::int64_t mem_dim_a = -1, mem_dim_b = -1;  // padded memory register dims
  std::string mem_label_a, mem_label_b;
  std::int64_t msg_dim_prev = 1;
  std::string msg_label_prev;
  for (int i = 1; i <= r + 1; ++i) {
    const bool last = (i == r + 1);
    const StrictAction& a1 = s1.actions[static_cast<std::size_t>(i - 1)];
    const StrictAction& a2 = s2.actions[static_cast<std::size_t>(i - 1)];
    if (a1.actor != a2.actor || a1.first != a2.first ||
        a1.emits_outs != a2.emits_outs ||
        a1.in_factors.size() != a2.in_factors.size()) {
      throw validation_error("convex_mix: branch structures diverge");
    }
    const Party actor = a1.actor;
    std::int64_t& mem_dim = (actor == Party::alice) ? mem_dim_a : mem_dim_b;
    std::string& mem_label =
        (actor == Party::alice) ? mem_label_a : mem_label_b;

    // Padded input factors.
    std::vector<std::int64_t> in_pad;
    if (a1.first) {
      const auto& ins = (actor == Party::alice) ? q.a_in : q.b_in;
      for (const auto& rg : ins) in_pad.push_back(rg.dim);
      in_pad.push_back((actor == Party::alice) ? ta : tb);
    } else {
      in_pad.push_back(mem_dim);
    }
    if (i > 1) in_pad.push_back(msg_dim_prev);
    if (in_pad.size() != a1.in_factors.size()) {
      throw validation_error("convex_mix: action factor shapes diverge");
    }

    // Padded output factors, oversizing memory if needed to keep an
    // isometry after padding.
    const std::int64_t outs_dim = std::max(a1.outs_dim, a2.outs_dim);
    std::int64_t mem_out = std::max(a1.mem_out, a2.mem_out);
    const std::int64_t msg_out = last ? 1 : std::max(a1.msg_out, a2.msg_out);
    while (product(in_pad) > outs_dim * mem_out * msg_out) mem_out *= 2;

    std::vector<std::int64_t> out_pad;
    if (a1.emits_outs) out_pad.push_back(outs_dim);
    out_pad.push_back(mem_out);
    if (!last) out_pad.push_back(msg_out);

    Mat u1 = embed_and_complete(a1.m, a1.in_factors, in_pad, a1.out_factors,
                                out_pad);
    Mat u2 = embed_and_complete(a2.m, a2.in_factors, in_pad, a2.out_factors,
                                out_pad);
    const std::int64_t din = product(in_pad);
    const std::int64_t dout = product(out_pad);
    Mat big = Mat::Zero(2 * dout, 2 * din);
    big.block(0, 0, dout, din) = u1;
    big.block(dout, din, dout, din) = u2;

    const std::string sel = (actor == Party::alice) ? "_mixSelA" : "_mixSelB";
    Isometry op;
    op.in.push_back({sel, 2});
    if (a1.first) {
      const auto& ins = (actor == Party::alice) ? q.a_in : q.b_in;
      for (const auto& rg : ins) op.in.push_back(rg);
      const std::int64_t tdim = (actor == Party::alice) ? ta : tb;
      if (tdim > 1) {
        op.in.push_back({(actor == Party::alice) ? "_mixTA" : "_mixTB", tdim});
      }
    } else {
      op.in.push_back({mem_label, mem_dim});
    }
    if (i > 1) op.in.push_back({msg_label_prev, msg_dim_prev});

    op.out.push_back({sel, 2});
    if (a1.emits_outs) {
      const auto& outs = (actor == Party::alice) ? q.a_out : q.b_out;
      std::int64_t check = 1;
      for (const auto& lab : outs) {
        const RegisterDecl rg = output_decl(lab);
        op.out.push_back(rg);
        check *= rg.dim;
      }
      if (check != outs_dim) {
        throw validation_error("convex_mix: output dims differ across "
                               "branches");
      }
    }
    const std::string new_mem_label =
        std::string("_mixM") + party_name(actor) + std::to_string(i);
    op.out.push_back({new_mem_label, mem_out});
    std::string msg_label;
    if (!last) {
      msg_label = "_mixC" + std::to_string(i);
      op.out.push_back({msg_label, msg_out});
    }
    op.m = std::move(big);

    // A dim-1 T register at the first action is left out of the register
    // declarations but still occupies a (trivial) factor in the matrices.
    if (a1.first && ((actor == Party::alice) ? ta : tb) == 1) {
      // nothing to declare; factor dim 1 does not change indices
    }

    mem_dim = mem_out;
    mem_label = new_mem_label;
    if (last) {
      q.final_op = std::move(op);
    } else {
      RoundSpec rs;
      rs.sender = actor;
      rs.op = std::move(op);
      rs.comm = {msg_label};
      q.round_ops.push_back(std::move(rs));
      msg_dim_prev = msg_out;
      msg_label_prev = msg_label;
    }
  }
  return q;
}

ProtocolSpec repeat_n(const ProtocolSpec& p, int n) {
  if (n < 1) throw validation_error("repeat_n: n must be at least 1");
  ProtocolSpec acc = p;
  for (int k = 2; k <= n; ++k) {
    acc = parallel(acc, p);
  }
  return acc;
}

InputDistribution power_dist(const InputDistribution& mu, int n) {
  InputDistribution acc = mu;
  for (int k = 2; k <= n; ++k) {
    acc = product_dist(acc, mu);
  }
  return acc;
}

SupResult qic_sup_over_prior(
    const ProtocolSpec& p, double grid_step,
    const std::function<bool(const InputDistribution&)>& constraint,
    const SimConfig& cfg) {
  if (!(grid_step > 0.0 && grid_step <= 0.5)) {
    throw validation_error("qic_sup_over_prior: grid_step outside (0, 1/2]");
  }
  const auto n = static_cast<std::int64_t>(std::llround(1.0 / grid_step));
  if (std::abs(static_cast<double>(n) * grid_step - 1.0) > 1e-9) {
    throw validation_error("qic_sup_over_prior: 1/grid_step is not integral");
  }
  const std::int64_t cells = p.x_size() * p.y_size();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(cells), 0);
  SupResult best;
  bool found = false;

  auto evaluate = [&](const std::vector<std::int64_t>& ks) {
    InputDistribution mu = InputDistribution::zero(p.x_size(), p.y_size());
    for (std::int64_t i = 0; i < cells; ++i) {
      mu.p[static_cast<std::size_t>(i)] =
          static_cast<double>(ks[static_cast<std::size_t>(i)]) /
          static_cast<double>(n);
    }
    if (!constraint(mu)) return;
    const double v = qic(p, mu, cfg).qic_total;
    if (!found || v > best.value) {
      best.value = v;
      best.argmax = mu;
      found = true;
    }
  };
  std::function<void(std::int64_t, std::int64_t)> rec =
      [&](std::int64_t cell, std::int64_t remaining) {
        if (cell == cells - 1) {
          counts[static_cast<std::size_t>(cell)] = remaining;
          evaluate(counts);
          return;
        }
        for (std::int64_t k = 0; k <= remaining; ++k) {
          counts[static_cast<std::size_t>(cell)] = k;
          rec(cell + 1, remaining - k);
        }
      };
  rec(0, n);
  if (!found) {
    throw validation_error("qic_sup_over_prior: empty constrained grid");
  }
  return best;
}

}  // namespace qic
