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

#include "qic/verify.hpp"

#include <cmath>
#include <functional>

#include "qic/builtins.hpp"
#include "qic/compose.hpp"
#include "qic/discrepancy.hpp"
#include "qic/info.hpp"
#include "qic/random.hpp"

namespace qic {

namespace {

struct Check {
  std::string name;
  // Returns the violation magnitude for one trial (0 when satisfied).
  std::function<double(Rng&, const SimConfig&)> trial;
  double tol = 1e-8;
  int fixed_trials = 0;  // overrides the requested count when > 0
};

PropertyResult run_check(const std::string& suite, const Check& c, int trials,
                         std::uint64_t seed, const SimConfig& cfg) {
  PropertyResult r;
  r.suite = suite;
  r.name = c.name;
  r.trials = c.fixed_trials > 0 ? c.fixed_trials : trials;
  std::hash<std::string> h;
  Rng rng(seed ^ static_cast<std::uint64_t>(h(suite + "/" + c.name)));
  for (int t = 0; t < r.trials; ++t) {
    const double v = c.trial(rng, cfg);
    if (v > c.tol) r.failures += 1;
    r.worst = std::max(r.worst, v);
  }
  return r;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat m(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      m.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return m;
}

double equality_gap(double a, double b) { return std::abs(a - b); }
double upper_gap(double lhs, double bound) { return std::max(0.0, lhs - bound); }

SimConfig composed_cfg(const SimConfig& cfg) {
  SimConfig c = cfg;
  c.dim_cap = std::max<std::int64_t>(c.dim_cap, std::int64_t{1} << 21);
  return c;
}

// ---------------------------------------------------------------------------

std::vector<Check> linalg_checks() {
  std::vector<Check> cs;
  cs.push_back(
      {"trace_distance_monotone_under_channels",
       [](Rng& rng, const SimConfig& cfg) {
         const std::int64_t d = rng.uniform_int(2, 4);
         DensityOperator r1 = rng.density("A", d, rng.uniform_int(1, d));
         DensityOperator r2 = rng.density("A", d, rng.uniform_int(1, d));
         const double before = trace_distance(r1, r2, cfg);
         Isometry v = rng.isometry({{"A", d}}, {{"B", d}, {"E", 2}});
         DensityOperator n1 = partial_trace(apply_isometry(r1, v, cfg), {"B"});
         DensityOperator n2 = partial_trace(apply_isometry(r2, v, cfg), {"B"});
         return upper_gap(trace_distance(n1, n2, cfg), before + 1e-9);
       },
       1e-12});
  cs.push_back(
      {"trace_distance_isometric_invariance",
       [](Rng& rng, const SimConfig& cfg) {
         const std::int64_t d = rng.uniform_int(2, 4);
         DensityOperator r1 = rng.density("A", d, rng.uniform_int(1, d));
         DensityOperator r2 = rng.density("A", d, rng.uniform_int(1, d));
         Isometry u = rng.isometry({{"A", d}}, {{"B", d}});
         const double before = trace_distance(r1, r2, cfg);
         const double after = trace_distance(apply_isometry(r1, u, cfg),
                                             apply_isometry(r2, u, cfg), cfg);
         return equality_gap(before, after);
       },
       1e-9});
  cs.push_back(
      {"trace_distance_stable_under_uncorrelated",
       [](Rng& rng, const SimConfig& cfg) {
         const std::int64_t d = rng.uniform_int(2, 3);
         DensityOperator r1 = rng.density("A", d, rng.uniform_int(1, d));
         DensityOperator r2 = rng.density("A", d, rng.uniform_int(1, d));
         DensityOperator sigma = rng.density("B", 2, 2);
         auto joint = [&](const DensityOperator& r) {
           DensityOperator j;
           j.layout = RegisterLayout::concat(r.layout, sigma.layout);
           j.mat = kron(r.mat, sigma.mat);
           return j;
         };
         return equality_gap(trace_distance(joint(r1), joint(r2), cfg),
                             trace_distance(r1, r2, cfg));
       },
       1e-9});
  cs.push_back(
      {"trace_distance_joint_linearity",
       [](Rng& rng, const SimConfig& cfg) {
         const int nx = 3;
         std::vector<double> px;
         double sum = 0.0;
         for (int x = 0; x < nx; ++x) {
           px.push_back(-std::log(rng.uniform(1e-12, 1.0)));
           sum += px.back();
         }
         for (auto& v : px) v /= sum;
         std::vector<DensityOperator> r1x, r2x;
         for (int x = 0; x < nx; ++x) {
           r1x.push_back(rng.density("A", 3, rng.uniform_int(1, 3)));
           r2x.push_back(rng.density("A", 3, rng.uniform_int(1, 3)));
         }
         auto block = [&](const std::vector<DensityOperator>& rx) {
           DensityOperator j;
           j.layout = RegisterLayout({{"Xc", nx}, {"A", 3}});
           j.mat = Mat::Zero(3 * nx, 3 * nx);
           for (int x = 0; x < nx; ++x) {
             j.mat.block(3 * x, 3 * x, 3, 3) = px[(std::size_t)x] * rx[(std::size_t)x].mat;
           }
           return j;
         };
         double rhs = 0.0;
         for (int x = 0; x < nx; ++x) {
           rhs += px[(std::size_t)x] *
                  trace_distance(r1x[(std::size_t)x], r2x[(std::size_t)x], cfg);
         }
         return equality_gap(trace_distance(block(r1x), block(r2x), cfg), rhs);
       },
       1e-9});
  cs.push_back(
      {"purification_roundtrip",
       [](Rng& rng, const SimConfig& cfg) {
         DensityOperator rho = rng.density("A", 3, rng.uniform_int(1, 3));
         GlobalPureState pure = purify(rho, "Rf", cfg);
         DensityOperator back = partial_trace(pure, {"A"}, cfg);
         return (back.mat - rho.mat).cwiseAbs().maxCoeff();
       },
       1e-10,
       50});
  return cs;
}

std::vector<Check> info_checks() {
  std::vector<Check> cs;
  cs.push_back({"pure_bipartite_symmetry",
                [](Rng& rng, const SimConfig& cfg) {
                  const std::int64_t da = rng.uniform_int(2, 4);
                  const std::int64_t db = rng.uniform_int(2, 4);
                  auto s = rng.haar_state(RegisterLayout({{"A", da}, {"B", db}}));
                  return equality_gap(entropy(s, {"A"}, cfg),
                                      entropy(s, {"B"}, cfg));
                },
                1e-9});
  cs.push_back({"chain_rule",
                [](Rng& rng, const SimConfig& cfg) {
                  auto s = rng.haar_state(RegisterLayout(
                      {{"A", 2}, {"B", 2}, {"C", 2}, {"D", 2}, {"E", 2}}));
                  const double lhs = cqmi(s, {"A", "B"}, {"C"}, {"D"}, cfg);
                  const double rhs = cqmi(s, {"A"}, {"C"}, {"D"}, cfg) +
                                     cqmi(s, {"B"}, {"C"}, {"A", "D"}, cfg);
                  return equality_gap(lhs, rhs);
                }});
  cs.push_back({"strong_subadditivity",
                [](Rng& rng, const SimConfig& cfg) {
                  auto s = rng.haar_state(RegisterLayout(
                      {{"A", 2}, {"B", 2}, {"C", 3}, {"E", 2}}));
                  return upper_gap(0.0, cqmi(s, {"A"}, {"B"}, {"C"}, cfg) + 1e-8);
                },
                1e-12});
  cs.push_back({"data_processing",
                [](Rng& rng, const SimConfig& cfg) {
                  auto s = rng.haar_state(RegisterLayout(
                      {{"A", 2}, {"B", 3}, {"C", 2}, {"E", 2}}));
                  const double before = cqmi(s, {"A"}, {"B"}, {"C"}, cfg);
                  Isometry v = rng.isometry({{"B", 3}}, {{"Bp", 2}, {"Ep", 2}});
                  auto s2 = apply_isometry(s, v, cfg);
                  const double after = cqmi(s2, {"A"}, {"Bp"}, {"C"}, cfg);
                  return upper_gap(after, before + 1e-8);
                },
                1e-12});
  cs.push_back({"purification_invariance",
                [](Rng& rng, const SimConfig& cfg) {
                  auto s = rng.haar_state(RegisterLayout(
                      {{"B", 2}, {"C", 2}, {"R", 4}}));
                  Isometry v = rng.isometry({{"R", 4}}, {{"Rp", 6}});
                  auto s2 = apply_isometry(s, v, cfg);
                  return equality_gap(cqmi(s, {"C"}, {"R"}, {"B"}, cfg),
                                      cqmi(s2, {"C"}, {"Rp"}, {"B"}, cfg));
                }});
  cs.push_back(
      {"classical_conditioning_averages",
       [](Rng& rng, const SimConfig& cfg) {
         const int nx = 3;
         std::vector<double> px;
         double sum = 0.0;
         for (int x = 0; x < nx; ++x) {
           px.push_back(-std::log(rng.uniform(1e-12, 1.0)));
           sum += px.back();
         }
         for (auto& v : px) v /= sum;
         RegisterLayout branch({{"A", 2}, {"B", 2}, {"C", 2}, {"E", 2}});
         std::vector<GlobalPureState> psis;
         for (int x = 0; x < nx; ++x) psis.push_back(rng.haar_state(branch));
         GlobalPureState s;
         s.layout = RegisterLayout(
             {{"Xc", nx}, {"Xcopy", nx}, {"A", 2}, {"B", 2}, {"C", 2}, {"E", 2}});
         s.amps = Vec::Zero(s.layout.total_dim());
         const std::int64_t db = branch.total_dim();
         for (int x = 0; x < nx; ++x) {
           const std::int64_t base = (x * nx + x) * db;
           s.amps.segment(base, db) =
               std::sqrt(px[(std::size_t)x]) * psis[(std::size_t)x].amps;
         }
         const double lhs = cqmi(s, {"A"}, {"B"}, {"C", "Xc"}, cfg);
         double rhs = 0.0;
         for (int x = 0; x < nx; ++x) {
           rhs += px[(std::size_t)x] *
                  cqmi(psis[(std::size_t)x], {"A"}, {"B"}, {"C"}, cfg);
         }
         return equality_gap(lhs, rhs);
       }});
  cs.push_back(
      {"additivity_over_products",
       [](Rng& rng, const SimConfig& cfg) {
         auto s1 = rng.haar_state(
             RegisterLayout({{"A1", 2}, {"B1", 2}, {"C1", 2}}));
         auto s2 = rng.haar_state(
             RegisterLayout({{"A2", 2}, {"B2", 2}, {"C2", 2}}));
         auto s = tensor(s1, s2);
         const double joint =
             cqmi(s, {"A1", "A2"}, {"B1", "B2"}, {"C1", "C2"}, cfg);
         const double parts = cqmi(s1, {"A1"}, {"B1"}, {"C1"}, cfg) +
                              cqmi(s2, {"A2"}, {"B2"}, {"C2"}, cfg);
         return equality_gap(joint, parts);
       }});
  return cs;
}

std::vector<Check> engine_checks() {
  std::vector<Check> cs;
  cs.push_back({"qic_within_qcc",
                [](Rng& rng, const SimConfig& cfg) {
                  ProtocolSpec p = random_protocol(rng);
                  InputDistribution mu = rng.distribution(2, 2);
                  const QicReport rep = qic(p, mu, cfg);
                  double v = upper_gap(rep.qic_total, rep.qcc + 1e-8);
                  v = std::max(v, upper_gap(-rep.qic_total, 1e-9));
                  return v;
                },
                1e-12});
  cs.push_back({"additivity_product_inputs",
                [](Rng& rng, const SimConfig& cfg) {
                  const SimConfig big = composed_cfg(cfg);
                  ProtocolSpec p = random_protocol(rng);
                  InputDistribution mu = rng.distribution(2, 2);
                  ProtocolSpec both = parallel(p, p);
                  const double joint =
                      qic(both, product_dist(mu, mu), big).qic_total;
                  const double single = qic(p, mu, big).qic_total;
                  return equality_gap(joint, 2.0 * single);
                }});
  cs.push_back({"splitting_product_inputs",
                [](Rng& rng, const SimConfig& cfg) {
                  const SimConfig big = composed_cfg(cfg);
                  ProtocolSpec p1 = random_protocol(rng);
                  ProtocolSpec p2 = random_protocol(rng);
                  InputDistribution mu1 = rng.distribution(2, 2);
                  InputDistribution mu2 = rng.distribution(2, 2);
                  const double joint =
                      qic(parallel(p1, p2), product_dist(mu1, mu2), big)
                          .qic_total;
                  const double parts = qic(p1, mu1, big).qic_total +
                                       qic(p2, mu2, big).qic_total;
                  return equality_gap(joint, parts);
                }});
  cs.push_back({"convex_mix_equality",
                [](Rng& rng, const SimConfig& cfg) {
                  const SimConfig big = composed_cfg(cfg);
                  RandomProtocolOptions opts;
                  opts.max_rounds = 2;
                  ProtocolSpec p1 = random_protocol(rng, opts);
                  ProtocolSpec p2 = random_protocol(rng, opts);
                  const double w = rng.uniform(0.0, 1.0);
                  InputDistribution mu = rng.distribution(2, 2);
                  const double mixed =
                      qic(convex_mix(w, p1, p2), mu, big).qic_total;
                  const double parts = w * qic(p1, mu, big).qic_total +
                                       (1.0 - w) * qic(p2, mu, big).qic_total;
                  return equality_gap(mixed, parts);
                }});
  cs.push_back({"subadditivity_correlated",
                [](Rng& rng, const SimConfig& cfg) {
                  const SimConfig big = composed_cfg(cfg);
                  ProtocolSpec p1 = random_protocol(rng);
                  ProtocolSpec p2 = random_protocol(rng);
                  InputDistribution joint = rng.distribution(4, 4);
                  const double whole =
                      qic(parallel(p1, p2), joint, big).qic_total;
                  const double parts =
                      qic(p1, marginal_dist(joint, 2, 2, 2, 2, 1), big)
                          .qic_total +
                      qic(p2, marginal_dist(joint, 2, 2, 2, 2, 2), big)
                          .qic_total;
                  return upper_gap(whole, parts + 1e-8);
                },
                1e-12});
  cs.push_back({"concavity",
                [](Rng& rng, const SimConfig& cfg) {
                  ProtocolSpec p = random_protocol(rng);
                  const int k = 3;
                  std::vector<InputDistribution> mus;
                  std::vector<double> nu;
                  double sum = 0.0;
                  for (int j = 0; j < k; ++j) {
                    mus.push_back(rng.distribution(2, 2));
                    nu.push_back(-std::log(rng.uniform(1e-12, 1.0)));
                    sum += nu.back();
                  }
                  for (auto& v : nu) v /= sum;
                  InputDistribution avg = InputDistribution::zero(2, 2);
                  double lhs = 0.0;
                  for (int j = 0; j < k; ++j) {
                    for (std::size_t c = 0; c < avg.p.size(); ++c) {
                      avg.p[c] += nu[(std::size_t)j] * mus[(std::size_t)j].p[c];
                    }
                    lhs += nu[(std::size_t)j] *
                           qic(p, mus[(std::size_t)j], cfg).qic_total;
                  }
                  return upper_gap(lhs, qic(p, avg, cfg).qic_total + 1e-8);
                },
                1e-12});
  cs.push_back({"quasi_convexity_remainder",
                [](Rng& rng, const SimConfig& cfg) {
                  ProtocolSpec p = random_protocol(rng);
                  InputDistribution mu1 = rng.distribution(2, 2);
                  InputDistribution mu2 = rng.distribution(2, 2);
                  const double w = rng.uniform(0.0, 1.0);
                  const double mixed =
                      qic(p, mix_dist(w, mu1, mu2), cfg).qic_total;
                  const double bound = w * qic(p, mu1, cfg).qic_total +
                                       (1.0 - w) * qic(p, mu2, cfg).qic_total +
                                       p.rounds * binary_entropy(w) + 1e-8;
                  return upper_gap(mixed, bound);
                },
                1e-12});
  cs.push_back({"continuity_bound",
                [](Rng& rng, const SimConfig& cfg) {
                  ProtocolSpec p = random_protocol(rng);
                  InputDistribution mu1 = rng.distribution(2, 2);
                  InputDistribution mu2 = rng.distribution(2, 2);
                  const double delta = tv_distance(mu1, mu2).delta;
                  const double gap =
                      std::abs(qic(p, mu1, cfg).qic_total -
                               qic(p, mu2, cfg).qic_total);
                  const double bound =
                      delta * p.rounds * (std::log2(2.0) + std::log2(2.0)) +
                      p.rounds * binary_entropy(delta) + 1e-8;
                  return upper_gap(gap, bound);
                },
                1e-12});
  cs.push_back({"onezero_bound",
                [](Rng& rng, const SimConfig& cfg) {
                  ProtocolSpec p = random_protocol(rng);
                  const double w = rng.uniform(0.01, 0.5);
                  InputDistribution mu_w = rng.distribution(2, 2);
                  // Shift the (1,1) mass to exactly w, rescaling the rest.
                  double rest = 1.0 - mu_w.at(1, 1);
                  for (auto& v : mu_w.p) v *= (1.0 - w) / rest;
                  mu_w.at(1, 1) = w;
                  InputDistribution mu0 = mu_w;
                  mu0.at(1, 1) = 0.0;
                  for (auto& v : mu0.p) v /= (1.0 - w);
                  const double gap = qic(p, mu_w, cfg).qic_total -
                                     qic(p, mu0, cfg).qic_total;
                  return upper_gap(gap,
                                   2.0 * p.rounds * binary_entropy(w) + 1e-8);
                },
                1e-12});
  cs.push_back({"relabel_invariance",
                [](Rng& rng, const SimConfig& cfg) {
                  ProtocolSpec p = random_protocol(rng);
                  InputDistribution mu = rng.distribution(2, 2);
                  ProtocolSpec q = add_label_suffix(p, "_renamed");
                  return equality_gap(qic(p, mu, cfg).qic_total,
                                      qic(q, mu, cfg).qic_total);
                },
                1e-9});
  cs.push_back({"identity_append_invariance",
                [](Rng& rng, const SimConfig& cfg) {
                  ProtocolSpec p = random_protocol(rng);
                  InputDistribution mu = rng.distribution(2, 2);
                  const double before = qic(p, mu, cfg).qic_total;
                  // Adjoin an untouched |0> register to Alice's share.
                  ProtocolSpec q = p;
                  GlobalPureState extra;
                  extra.layout = RegisterLayout({{"T_idle", 2}});
                  extra.amps = Vec::Zero(2);
                  extra.amps(0) = 1.0;
                  q.prestate = tensor(q.prestate, extra);
                  q.t_a.push_back("T_idle");
                  return equality_gap(before, qic(q, mu, cfg).qic_total);
                },
                1e-9});
  return cs;
}

std::vector<Check> and_checks() {
  std::vector<Check> cs;
  cs.push_back(
      {"exactness_all_inputs",
       [](Rng&, const SimConfig& cfg) {
         double worst = 0.0;
         for (int r = 1; r <= 8; ++r) {
           ProtocolSpec p = build_and_protocol({r});
           worst = std::max(worst, worst_case_error(p, and_task(), cfg));
           // The (1,1) branch must end with the qubit in -|1>.
           Transcript t =
               run(p, InputDistribution::point_mass(2, 2, 1, 1), cfg);
           const GlobalPureState& fin = t.final_snapshot().state;
           std::int64_t idx = 0;
           for (const auto& reg : fin.layout.regs()) {
             std::int64_t digit = 0;
             if (reg.label == "X" || reg.label == "Y" || reg.label == "OA" ||
                 reg.label == "OB") {
               digit = 1;
             } else if (reg.label == "R1" || reg.label == "R2") {
               digit = 3;  // (x, y) = (1, 1)
             }
             idx = idx * reg.dim + digit;
           }
           worst = std::max(worst, std::abs(fin.amps(idx) - cx(-1.0, 0.0)));
         }
         return worst;
       },
       1e-9, 1});
  cs.push_back(
      {"round_entropy_y0_pattern",
       [](Rng&, const SimConfig& cfg) {
         double worst = 0.0;
         for (int r = 1; r <= 6; ++r) {
           const AndProtocolParams params{r};
           Transcript t = run(build_and_protocol(params), mu_star(), cfg);
           for (int i = 1; i <= 4 * r - 1; i += 2) {
             const auto& snap = t.snapshots[(std::size_t)(i - 1)];
             double prob = 0.0;
             DensityOperator c =
                 conditional_density(snap.state, snap.comm, "Y", 0, &prob, cfg);
             const double engine_h = entropy(c, cfg);
             const double closed =
                 and_round_entropy(i, params, 0.0, AndBranch::y_equals_0);
             worst = std::max(worst, std::abs(engine_h - closed));
           }
         }
         return worst;
       },
       1e-8, 1});
  cs.push_back(
      {"qic_expansion_mu_star",
       [](Rng&, const SimConfig& cfg) {
         double worst = 0.0;
         for (int r = 1; r <= 6; ++r) {
           const AndProtocolParams params{r};
           const QicReport rep = qic(build_and_protocol(params), mu_star(), cfg);
           const double h = binary_entropy(std::pow(std::sin(params.theta()), 2));
           double total = 0.0;
           for (const auto& rc : rep.per_round) {
             const int m = rc.round % 4;
             const double expected = (m == 1 || m == 2) ? h / 3.0 : 0.0;
             worst = std::max(worst,
                              std::abs(rc.cqmi_contribution - expected));
             total += expected;
           }
           worst = std::max(worst, std::abs(rep.qic_total - total));
         }
         return worst;
       },
       1e-8, 1});
  cs.push_back(
      {"qic_decay_band",
       [](Rng&, const SimConfig& cfg) {
         double worst = 0.0;
         double prev = 0.0;
         double lo = 1e300, hi = 0.0;
         for (int r = 1; r <= 16; ++r) {
           const double v =
               qic(build_and_protocol({r}), mu_star(), cfg).qic_total;
           if (r > 1) worst = std::max(worst, upper_gap(v, prev - 1e-12));
           prev = v;
           const double scaled = r * v / std::log2(8.0 * r);
           lo = std::min(lo, scaled);
           hi = std::max(hi, scaled);
         }
         worst = std::max(worst, upper_gap(calibration::kDecayBandLo, lo));
         worst = std::max(worst, upper_gap(hi, calibration::kDecayBandHi));
         worst = std::max(worst, upper_gap(hi, 2.0 * lo));
         return worst;
       },
       1e-12, 1});
  cs.push_back(
      {"mass_w_blowup",
       [](Rng&, const SimConfig& cfg) {
         double worst = 0.0;
         for (const int r : {2, 4, 8}) {
           const AndProtocolParams params{r};
           const ProtocolSpec p = build_and_protocol(params);
           const double base = qic(p, mu_star(), cfg).qic_total;
           for (const double w : {0.01, 0.05, 0.1, 0.15}) {
             const InputDistribution mu = mu_with_mass(w);
             const double qw = qic(p, mu, cfg).qic_total;
             const double need =
                 calibration::kMassBlowupConstant * r * binary_entropy(w);
             worst = std::max(worst, upper_gap(need, qw - base));
             // closed-form H(C|Y=1) at odd messages
             Transcript t = run(p, mu, cfg);
             for (int i = 1; i <= 4 * r - 1; i += 2) {
               const auto& snap = t.snapshots[(std::size_t)(i - 1)];
               double prob = 0.0;
               DensityOperator c = conditional_density(snap.state, snap.comm,
                                                       "Y", 1, &prob, cfg);
               const double engine_h = entropy(c, cfg);
               const double closed =
                   and_round_entropy(i, params, w, AndBranch::y_equals_1);
               worst = std::max(worst, std::abs(engine_h - closed));
             }
           }
         }
         return worst;
       },
       1e-8, 1});
  cs.push_back(
      {"classical_exchange_baseline",
       [](Rng&, const SimConfig& cfg) {
         const ProtocolSpec p = build_classical_exchange(and_task());
         double worst = upper_gap(worst_case_error(p, and_task(), cfg), 1e-9);
         worst = std::max(worst, equality_gap(qcc(p), 2.0));
         const QicReport rep = qic(p, InputDistribution::uniform(2, 2), cfg);
         worst = std::max(
             worst, equality_gap(rep.per_round[0].cqmi_contribution, 0.5));
         worst = std::max(worst, upper_gap(rep.qic_total, rep.qcc + 1e-9));
         return worst;
       },
       1e-8, 1});
  cs.push_back(
      {"dummy_protocol_zero_information",
       [](Rng& rng, const SimConfig& cfg) {
         const SimConfig big = composed_cfg(cfg);
         const int rounds = (int)rng.uniform_int(1, 4);
         const std::int64_t dim = rng.uniform_int(2, 3);
         const ProtocolSpec d = build_dummy(rounds, dim);
         InputDistribution mu = rng.distribution(2, 2);
         const QicReport rep = qic(d, mu, cfg);
         double worst = std::abs(rep.qic_total);
         worst = std::max(
             worst, equality_gap(rep.qcc, rounds * std::log2((double)dim)));
         // Running a dummy next to a real protocol leaves QIC unchanged.
         const ProtocolSpec p3 = build_and_protocol({1});
         const double alone = qic(p3, mu_star(), big).qic_total;
         const double padded =
             qic(parallel(d, p3), product_dist(mu, mu_star()), big).qic_total;
         worst = std::max(worst, equality_gap(alone, padded));
         return worst;
       },
       1e-9, 3});
  return cs;
}

std::vector<Check> disc_checks() {
  std::vector<Check> cs;
  cs.push_back({"oracle_equivalence",
                [](Rng& rng, const SimConfig&) {
                  const std::int64_t nx = rng.uniform_int(1, 4);
                  const std::int64_t ny = rng.uniform_int(1, 4);
                  BooleanTable g = BooleanTable::constant(nx, ny, 0);
                  for (auto& v : g.v) {
                    v = static_cast<std::uint8_t>(rng.uniform_int(0, 1));
                  }
                  InputDistribution mu = rng.distribution(nx, ny);
                  const DiscResult a = disc_oracle(g, mu);
                  const DiscResult b = disc_fast(g, mu);
                  return (a.value == b.value) ? 0.0 : 1.0;
                },
                0.0, 200});
  cs.push_back({"witness_validity",
                [](Rng& rng, const SimConfig&) {
                  const std::int64_t nx = rng.uniform_int(1, 4);
                  const std::int64_t ny = rng.uniform_int(1, 4);
                  BooleanTable g = BooleanTable::constant(nx, ny, 0);
                  for (auto& v : g.v) {
                    v = static_cast<std::uint8_t>(rng.uniform_int(0, 1));
                  }
                  InputDistribution mu = rng.distribution(nx, ny);
                  const DiscResult a = disc_oracle(g, mu);
                  const DiscResult b = disc_fast(g, mu);
                  double worst = std::abs(
                      rectangle_value(g, mu, a.rows, a.cols) - a.value);
                  worst = std::max(worst,
                                   std::abs(rectangle_value(g, mu, b.rows,
                                                            b.cols) -
                                            b.value));
                  return worst;
                },
                1e-12});
  cs.push_back({"gdm_monotone_in_delta",
                [](Rng& rng, const SimConfig&) {
                  BooleanTable f = BooleanTable::constant(2, 2, 0);
                  for (auto& v : f.v) {
                    v = static_cast<std::uint8_t>(rng.uniform_int(0, 1));
                  }
                  InputDistribution mu = rng.distribution(2, 2);
                  const double d1 = rng.uniform(0.0, 1.0);
                  const double d2 = rng.uniform(0.0, 1.0);
                  const double lo = std::min(d1, d2), hi = std::max(d1, d2);
                  return upper_gap(gdm_delta(f, mu, lo).value,
                                   gdm_delta(f, mu, hi).value + 1e-12);
                },
                1e-12, 50});
  cs.push_back({"gdm_zero_equals_log_inverse_disc",
                [](Rng& rng, const SimConfig&) {
                  BooleanTable f = BooleanTable::constant(2, 2, 0);
                  for (auto& v : f.v) {
                    v = static_cast<std::uint8_t>(rng.uniform_int(0, 1));
                  }
                  // full-support distribution
                  InputDistribution mu = rng.distribution(2, 2);
                  return equality_gap(
                      gdm_delta(f, mu, 0.0).value,
                      std::log2(1.0 / disc_fast(f, mu).value));
                },
                1e-12});
  cs.push_back({"xor_uniform_values",
                [](Rng&, const SimConfig&) {
                  const BooleanTable f = BooleanTable::xor2();
                  const InputDistribution mu = InputDistribution::uniform(2, 2);
                  double worst =
                      equality_gap(disc_oracle(f, mu).value, 0.25);
                  worst = std::max(worst,
                                   equality_gap(gdm_delta(f, mu, 0.0).value,
                                                2.0));
                  return worst;
                },
                0.0, 1});
  cs.push_back({"disj_scaling_nondecreasing",
                [](Rng&, const SimConfig&) {
                  double prev = -1.0;
                  double worst = 0.0;
                  for (int n = 1; n <= 3; ++n) {
                    const BooleanTable f = BooleanTable::disj(n);
                    const std::int64_t size = std::int64_t{1} << n;
                    const InputDistribution mu =
                        InputDistribution::uniform(size, size);
                    double val;
                    if (n < 3) {
                      val = gdm_delta(f, mu, 0.0).value;
                    } else {
                      // 8x8 exceeds the flip-set enumerator's cell cap;
                      // delta = 0 on full support reduces to the plain
                      // discrepancy bound.
                      val = std::log2(1.0 / disc_fast(f, mu).value);
                    }
                    worst = std::max(worst, upper_gap(prev, val + 1e-12));
                    prev = val;
                  }
                  return worst;
                },
                1e-12, 1});
  return cs;
}

std::vector<PropertyResult> run_suite_checks(const std::string& suite,
                                             const std::vector<Check>& cs,
                                             int trials, std::uint64_t seed,
                                             const SimConfig& cfg) {
  std::vector<PropertyResult> out;
  for (const auto& c : cs) {
    out.push_back(run_check(suite, c, trials, seed, cfg));
  }
  return out;
}

}  // namespace

std::vector<PropertyResult> verify_suite(const std::string& suite, int trials,
                                         std::uint64_t seed,
                                         const SimConfig& cfg) {
  std::vector<PropertyResult> out;
  if (suite == "linalg" || suite == "all") {
    auto r = run_suite_checks("linalg", linalg_checks(), trials, seed, cfg);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (suite == "info" || suite == "all") {
    auto r = run_suite_checks("info", info_checks(), trials, seed, cfg);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (suite == "engine" || suite == "all") {
    auto r = run_suite_checks("engine", engine_checks(), trials, seed, cfg);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (suite == "and" || suite == "all") {
    auto r = run_suite_checks("and", and_checks(), trials, seed, cfg);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (suite == "disc" || suite == "all") {
    auto r = run_suite_checks("disc", disc_checks(), trials, seed, cfg);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (out.empty()) {
    throw validation_error("unknown verification suite '" + suite + "'");
  }
  return out;
}

}  // namespace qic
