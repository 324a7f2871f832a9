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

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qic/builtins.hpp"
#include "qic/compose.hpp"
#include "qic/io.hpp"
#include "qic/verify.hpp"

namespace {

using namespace qic;

struct GlobalOpts {
  std::uint64_t seed = 7;
  SimConfig cfg;
  std::string out;  // base path; empty = stdout only
};

double parse_fraction(const std::string& tok) {
  const auto slash = tok.find('/');
  if (slash == std::string::npos) return std::stod(tok);
  return std::stod(tok.substr(0, slash)) / std::stod(tok.substr(slash + 1));
}

InputDistribution parse_prior(const std::string& csv, std::int64_t nx,
                              std::int64_t ny) {
  std::vector<double> vals;
  std::string tok;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!tok.empty()) vals.push_back(parse_fraction(tok));
      tok.clear();
    } else {
      tok += c;
    }
  }
  if (static_cast<std::int64_t>(vals.size()) != nx * ny) {
    throw validation_error("--prior needs " + std::to_string(nx * ny) +
                           " comma-separated entries");
  }
  InputDistribution mu;
  mu.nx = nx;
  mu.ny = ny;
  mu.p = vals;
  mu.validate();
  return mu;
}

void emit(const GlobalOpts& g, const std::string& csv, const json& mirror) {
  if (g.out.empty()) {
    std::cout << csv;
  } else {
    write_text_file(g.out + ".csv", csv);
    write_text_file(g.out + ".json", mirror.dump(2) + "\n");
  }
}

std::string report_csv(const GlobalOpts& g, const QicReport& rep) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& rc : rep.per_round) {
    rows.push_back({std::to_string(rc.round), party_name(rc.sender),
                    fmt_double(rc.cqmi_contribution), "", "", ""});
  }
  rows.push_back({"total", "", "", fmt_double(rep.qic_total),
                  fmt_double(rep.qcc),
                  rep.avg_error ? fmt_double(*rep.avg_error) : ""});
  return make_csv(
      csv_header_comment(g.seed, g.cfg),
      {"round", "sender", "cqmi_contribution", "qic_total", "qcc", "avg_error"},
      rows);
}

void check_report_invariants(const QicReport& rep) {
  double sum = 0.0;
  for (const auto& rc : rep.per_round) sum += rc.cqmi_contribution;
  if (std::abs(sum - rep.qic_total) > 1e-9) {
    throw validation_error("report invariant broken: per-round sum != total");
  }
  if (rep.qic_total < -1e-9 || rep.qic_total > rep.qcc + 1e-8) {
    throw validation_error(
        "report invariant broken: QIC outside [0, QCC]");
  }
}

int cmd_run(const GlobalOpts& g, const std::string& builtin,
            const std::string& protocol_file, const std::string& dist_file,
            const std::string& prior, int r, int rounds, std::int64_t dim,
            int n, const std::string& task_name) {
  ProtocolSpec p;
  std::optional<TaskSpec> task;
  if (!builtin.empty()) {
    if (builtin == "and") {
      p = build_and_protocol({r});
      task = and_task();
    } else if (builtin == "dummy") {
      p = build_dummy(rounds, dim);
    } else if (builtin == "classical-and") {
      p = build_classical_exchange(and_task());
      task = and_task();
    } else if (builtin == "disj") {
      p = build_disj_from_and({r}, n);
      task = disj_task(n);
    } else {
      throw validation_error("unknown builtin '" + builtin + "'");
    }
  } else if (!protocol_file.empty()) {
    p = protocol_from_json(json::parse(read_text_file(protocol_file)));
  } else {
    throw validation_error("run needs --builtin or --protocol");
  }
  if (task_name == "and") {
    task = and_task();
  } else if (task_name == "none") {
    task.reset();
  } else if (!task_name.empty() && task_name.rfind("disj", 0) == 0) {
    task = disj_task(std::stoi(task_name.substr(4)));
  }

  InputDistribution mu;
  if (!dist_file.empty()) {
    mu = distribution_from_json(json::parse(read_text_file(dist_file)));
  } else if (!prior.empty()) {
    mu = parse_prior(prior, p.x_size(), p.y_size());
  } else {
    mu = InputDistribution::uniform(p.x_size(), p.y_size());
  }

  QicReport rep =
      task.has_value() ? qic(p, mu, *task, g.cfg) : qic(p, mu, g.cfg);
  check_report_invariants(rep);
  emit(g, report_csv(g, rep), report_to_json(rep));
  return 0;
}

int cmd_sweep_r(const GlobalOpts& g, int r_min, int r_max,
                const std::string& prior) {
  InputDistribution mu =
      prior.empty() ? mu_star() : parse_prior(prior, 2, 2);
  std::vector<std::vector<std::string>> rows;
  json mirror = json::array();
  double prev = 0.0;
  bool decreasing = true;
  for (int r = r_min; r <= r_max; ++r) {
    ProtocolSpec p = build_and_protocol({r});
    QicReport rep = qic(p, mu, and_task(), g.cfg);
    double round_max = 0.0;
    for (const auto& rc : rep.per_round) {
      round_max = std::max(round_max, rc.cqmi_contribution);
    }
    rows.push_back({std::to_string(r), fmt_double(rep.qic_total),
                    fmt_double(rep.qcc),
                    rep.avg_error ? fmt_double(*rep.avg_error) : "",
                    fmt_double(round_max)});
    mirror.push_back({{"r", r},
                      {"qic", rep.qic_total},
                      {"qcc", rep.qcc},
                      {"avg_error", rep.avg_error.value_or(0.0)},
                      {"max_round_contribution", round_max}});
    if (r > r_min && rep.qic_total >= prev) decreasing = false;
    prev = rep.qic_total;
  }
  if (!decreasing) {
    std::cerr << "warning: qic column is not strictly decreasing\n";
  }
  emit(g,
       make_csv(csv_header_comment(g.seed, g.cfg),
                {"r", "qic", "qcc", "avg_error", "max_round_contribution"},
                rows),
       mirror);
  return 0;
}

int cmd_sweep_w(const GlobalOpts& g, int r, const std::string& w_list) {
  std::vector<double> ws;
  std::string tok;
  for (char c : w_list + ",") {
    if (c == ',') {
      if (!tok.empty()) ws.push_back(parse_fraction(tok));
      tok.clear();
    } else {
      tok += c;
    }
  }
  const AndProtocolParams params{r};
  const ProtocolSpec p = build_and_protocol(params);
  const double base = qic(p, mu_star(), g.cfg).qic_total;
  std::vector<std::vector<std::string>> rows;
  json mirror = json::array();
  for (const double w : ws) {
    const InputDistribution mu = mu_with_mass(w);
    const QicReport rep = qic(p, mu, and_task(), g.cfg);
    const Transcript t = run(p, mu, g.cfg);
    double max_dev = 0.0;
    json per_round = json::array();
    for (int i = 1; i <= 4 * r - 1; i += 2) {
      const auto& snap = t.snapshots[static_cast<std::size_t>(i - 1)];
      double prob = 0.0;
      DensityOperator c =
          conditional_density(snap.state, snap.comm, "Y", 1, &prob, g.cfg);
      const double engine_h = entropy(c, g.cfg);
      const double closed =
          and_round_entropy(i, params, w, AndBranch::y_equals_1);
      max_dev = std::max(max_dev, std::abs(engine_h - closed));
      per_round.push_back({{"message", i},
                           {"engine_h_c_given_y1", engine_h},
                           {"closed_form", closed}});
    }
    const double delta_qic = rep.qic_total - base;
    const double rhw = r * binary_entropy(w);
    rows.push_back({fmt_double(w), fmt_double(rep.qic_total),
                    fmt_double(delta_qic), fmt_double(rhw),
                    fmt_double(max_dev)});
    mirror.push_back({{"w", w},
                      {"qic", rep.qic_total},
                      {"delta_qic", delta_qic},
                      {"r_times_h_w", rhw},
                      {"max_formula_deviation", max_dev},
                      {"rounds", per_round}});
  }
  emit(g,
       make_csv(csv_header_comment(g.seed, g.cfg),
                {"w", "qic", "delta_qic", "r_times_h_w",
                 "max_formula_deviation"},
                rows),
       mirror);
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, int trials) {
  const auto results = verify_suite(suite, trials, g.seed, g.cfg);
  std::vector<std::vector<std::string>> rows;
  json mirror = json::array();
  int failures = 0;
  for (const auto& r : results) {
    rows.push_back({r.suite, r.name, std::to_string(r.trials),
                    std::to_string(r.failures), fmt_double(r.worst)});
    mirror.push_back({{"suite", r.suite},
                      {"property", r.name},
                      {"trials", r.trials},
                      {"failures", r.failures},
                      {"worst_violation", r.worst}});
    failures += r.failures;
  }
  const std::string csv =
      make_csv(csv_header_comment(g.seed, g.cfg),
               {"suite", "property", "trials", "failures", "worst_violation"},
               rows);
  std::cout << csv;
  if (!g.out.empty()) {
    write_text_file(g.out + ".csv", csv);
    write_text_file(g.out + ".json", mirror.dump(2) + "\n");
  }
  std::cout << (failures == 0 ? "all properties passed\n"
                              : "FAILURES: " + std::to_string(failures) + "\n");
  return failures == 0 ? 0 : 1;
}

int cmd_gdm(const GlobalOpts& g, const std::string& table_file,
            const std::string& builtin, int n, const std::string& dist_file,
            double delta, bool search, double grid) {
  BooleanTable f;
  if (!table_file.empty()) {
    f = table_from_json(json::parse(read_text_file(table_file)));
  } else if (builtin == "xor") {
    f = BooleanTable::xor2();
  } else if (builtin == "disj") {
    f = BooleanTable::disj(n);
  } else if (builtin == "and") {
    f = BooleanTable::constant(2, 2, 0);
    f.v = {0, 0, 0, 1};
  } else {
    throw validation_error("gdm needs --table or --builtin xor|and|disj");
  }

  if (search) {
    const GdmSearchResult res = gdm_search(f, delta, grid);
    std::vector<std::vector<std::string>> rows;
    rows.push_back({fmt_double(delta), fmt_double(res.value)});
    json mirror = {{"delta", delta},
                   {"value", res.value},
                   {"best_mu", distribution_to_json(res.argmax)}};
    emit(g,
         make_csv(csv_header_comment(g.seed, g.cfg), {"delta", "value"}, rows),
         mirror);
    return 0;
  }

  InputDistribution mu =
      dist_file.empty()
          ? InputDistribution::uniform(f.nx, f.ny)
          : distribution_from_json(json::parse(read_text_file(dist_file)));
  const GdmResult res = gdm_delta(f, mu, delta);
  const DiscResult d = disc_fast(res.witness_g, mu);
  std::string gbits;
  for (auto v : res.witness_g.v) gbits += (v ? '1' : '0');
  std::vector<std::vector<std::string>> rows;
  rows.push_back({fmt_double(delta), fmt_double(res.value),
                  std::to_string(res.flips), gbits,
                  std::to_string(d.rows), std::to_string(d.cols)});
  json mirror = {{"delta", delta},
                 {"value", res.value},
                 {"flip_mask", res.flips},
                 {"witness_g", table_to_json(res.witness_g)},
                 {"disc_witness_rows", d.rows},
                 {"disc_witness_cols", d.cols}};
  emit(g,
       make_csv(csv_header_comment(g.seed, g.cfg),
                {"delta", "value", "flip_mask", "witness_g", "rect_rows",
                 "rect_cols"},
                rows),
       mirror);
  return 0;
}

int cmd_export_builtin(const GlobalOpts& g, const std::string& builtin, int r,
                       int rounds, std::int64_t dim, int n,
                       const std::string& file) {
  ProtocolSpec p;
  if (builtin == "and") {
    p = build_and_protocol({r});
  } else if (builtin == "dummy") {
    p = build_dummy(rounds, dim);
  } else if (builtin == "classical-and") {
    p = build_classical_exchange(and_task());
  } else if (builtin == "disj") {
    p = build_disj_from_and({r}, n);
  } else {
    throw validation_error("unknown builtin '" + builtin + "'");
  }
  const std::string text = protocol_to_json(p).dump(2) + "\n";
  if (file.empty()) {
    std::cout << text;
  } else {
    write_text_file(file, text);
  }
  (void)g;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qicsim: exact simulation and analysis of two-party "
               "interactive quantum protocols"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed echoed into outputs and used by "
                                   "randomized commands");
  app.add_option("--dim-cap", g.cfg.dim_cap, "dense dimension cap");
  app.add_option("--tol-norm", g.cfg.tol_norm, "norm tolerance");
  app.add_option("--tol-herm", g.cfg.tol_herm, "hermiticity tolerance");
  app.add_option("--tol-psd", g.cfg.tol_psd, "positivity tolerance");
  app.add_option("--tol-iso", g.cfg.tol_iso, "isometry tolerance");
  app.add_option("--out", g.out, "output base path (writes <out>.csv and "
                                 "<out>.json)");

  std::string builtin, protocol_file, dist_file, prior, task_name;
  int r = 1, rounds = 2, n = 2, r_min = 1, r_max = 8;
  std::int64_t dim = 2;
  std::string w_list = "0.01,0.05,0.1";
  std::string suite = "all";
  int trials = 100;
  std::string table_file, gdm_builtin;
  double delta = 0.0, grid = 1.0 / 6.0;
  bool search = false;
  std::string export_file;

  auto* c_run = app.add_subcommand("run", "simulate a protocol and report "
                                          "QIC, QCC and error");
  c_run->add_option("--builtin", builtin,
                    "and | dummy | classical-and | disj");
  c_run->add_option("--protocol", protocol_file, "protocol JSON file");
  c_run->add_option("--dist", dist_file, "distribution JSON file");
  c_run->add_option("--prior", prior,
                    "comma-separated probabilities (fractions allowed)");
  c_run->add_option("--r", r, "AND protocol round parameter");
  c_run->add_option("--rounds", rounds, "dummy protocol rounds");
  c_run->add_option("--dim", dim, "dummy message dimension");
  c_run->add_option("--n", n, "disj coordinates");
  c_run->add_option("--task", task_name, "and | disj<N> | none");

  auto* c_sr = app.add_subcommand("sweep-r", "AND protocol QIC against the "
                                             "round parameter");
  c_sr->add_option("--r-min", r_min, "first round parameter");
  c_sr->add_option("--r-max", r_max, "last round parameter");
  c_sr->add_option("--prior", prior, "prior (default 1/3,1/3,1/3,0)");

  auto* c_sw = app.add_subcommand("sweep-w", "AND protocol QIC against the "
                                             "mass on (1,1)");
  c_sw->add_option("--r", r, "round parameter");
  c_sw->add_option("--w", w_list, "comma-separated masses");

  auto* c_ver = app.add_subcommand("verify", "run the property suites");
  c_ver->add_option("--suite", suite, "linalg | info | engine | and | disc | "
                                      "all");
  c_ver->add_option("--trials", trials, "random trials per property");

  auto* c_gdm = app.add_subcommand("gdm", "discrepancy and generalized "
                                          "discrepancy bounds");
  c_gdm->add_option("--table", table_file, "truth-table JSON file");
  c_gdm->add_option("--builtin", gdm_builtin, "xor | and | disj");
  c_gdm->add_option("--n", n, "disj coordinates");
  c_gdm->add_option("--dist", dist_file, "distribution JSON file");
  c_gdm->add_option("--delta", delta, "allowed disagreement mass");
  c_gdm->add_flag("--search", search, "grid-search over priors");
  c_gdm->add_option("--grid", grid, "grid step for --search");

  auto* c_exp = app.add_subcommand("export-builtin", "write a builtin "
                                                     "protocol as JSON");
  c_exp->add_option("--builtin", builtin, "and | dummy | classical-and | "
                                          "disj");
  c_exp->add_option("--r", r, "AND protocol round parameter");
  c_exp->add_option("--rounds", rounds, "dummy protocol rounds");
  c_exp->add_option("--dim", dim, "dummy message dimension");
  c_exp->add_option("--n", n, "disj coordinates");
  c_exp->add_option("--file", export_file, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_run->parsed()) {
      return cmd_run(g, builtin, protocol_file, dist_file, prior, r, rounds,
                     dim, n, task_name);
    }
    if (c_sr->parsed()) return cmd_sweep_r(g, r_min, r_max, prior);
    if (c_sw->parsed()) return cmd_sweep_w(g, r, w_list);
    if (c_ver->parsed()) return cmd_verify(g, suite, trials);
    if (c_gdm->parsed()) {
      return cmd_gdm(g, table_file, gdm_builtin, n, dist_file, delta, search,
                     grid);
    }
    if (c_exp->parsed()) {
      return cmd_export_builtin(g, builtin, r, rounds, dim, n, export_file);
    }
  } catch (const dim_cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
