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

#include "qic/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qic {

json complex_to_json(const cx& z) { return json::array({z.real(), z.imag()}); }

cx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw validation_error("complex number must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw validation_error("matrix must be a nonempty nested array");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Mat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols) {
      throw validation_error("matrix rows have inconsistent lengths");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(j[r][c]);
    }
  }
  return m;
}

namespace {

json decls_to_json(const std::vector<RegisterDecl>& regs) {
  json a = json::array();
  for (const auto& r : regs) a.push_back({{"label", r.label}, {"dim", r.dim}});
  return a;
}

std::vector<RegisterDecl> decls_from_json(const json& j, const char* field) {
  if (!j.is_array()) {
    throw validation_error(std::string("field '") + field +
                           "' must be an array of {label, dim}");
  }
  std::vector<RegisterDecl> regs;
  for (const auto& e : j) {
    if (!e.contains("label") || !e.contains("dim")) {
      throw validation_error(std::string("field '") + field +
                             "' entries need 'label' and 'dim'");
    }
    regs.push_back({e["label"].get<std::string>(), e["dim"].get<std::int64_t>()});
  }
  return regs;
}

json alphabet(std::int64_t n) {
  json a = json::array();
  for (std::int64_t i = 0; i < n; ++i) a.push_back(i);
  return a;
}

}  // namespace

json protocol_to_json(const ProtocolSpec& p) {
  json j;
  j["rounds"] = p.rounds;
  j["x_alphabet"] = alphabet(p.x_size());
  j["y_alphabet"] = alphabet(p.y_size());
  {
    json pre;
    json labels = json::array(), dims = json::array();
    for (const auto& r : p.prestate.layout.regs()) {
      labels.push_back(r.label);
      dims.push_back(r.dim);
    }
    pre["labels"] = labels;
    pre["dims"] = dims;
    json amps = json::array();
    for (Eigen::Index i = 0; i < p.prestate.amps.size(); ++i) {
      amps.push_back(complex_to_json(p.prestate.amps(i)));
    }
    pre["amplitudes"] = amps;
    j["prestate"] = pre;
  }
  json isos = json::array();
  for (const auto& rs : p.round_ops) {
    json e;
    e["in"] = decls_to_json(rs.op.in);
    e["out"] = decls_to_json(rs.op.out);
    e["matrix"] = matrix_to_json(rs.op.m);
    e["sender"] = party_name(rs.sender);
    isos.push_back(std::move(e));
  }
  {
    json e;
    e["in"] = decls_to_json(p.final_op.in);
    e["out"] = decls_to_json(p.final_op.out);
    e["matrix"] = matrix_to_json(p.final_op.m);
    e["sender"] = party_name(p.final_party());
    isos.push_back(std::move(e));
  }
  j["isometries"] = std::move(isos);
  json roles;
  roles["a_in"] = decls_to_json(p.a_in);
  roles["b_in"] = decls_to_json(p.b_in);
  roles["t_a"] = p.t_a;
  roles["t_b"] = p.t_b;
  roles["a_out"] = p.a_out;
  roles["b_out"] = p.b_out;
  json comm = json::array();
  for (const auto& rs : p.round_ops) comm.push_back(rs.comm);
  roles["comm"] = comm;
  j["roles"] = roles;
  return j;
}

ProtocolSpec protocol_from_json(const json& j) {
  ProtocolSpec p;
  if (!j.contains("rounds") || !j.contains("isometries") ||
      !j.contains("roles")) {
    throw validation_error(
        "protocol file needs 'rounds', 'isometries' and 'roles'");
  }
  p.rounds = j["rounds"].get<int>();
  const json& roles = j["roles"];
  p.a_in = decls_from_json(roles.at("a_in"), "roles.a_in");
  p.b_in = decls_from_json(roles.at("b_in"), "roles.b_in");
  p.t_a = roles.value("t_a", std::vector<std::string>{});
  p.t_b = roles.value("t_b", std::vector<std::string>{});
  p.a_out = roles.value("a_out", std::vector<std::string>{});
  p.b_out = roles.value("b_out", std::vector<std::string>{});

  {
    const json& pre = j.at("prestate");
    std::vector<RegisterDecl> regs;
    const auto labels = pre.at("labels").get<std::vector<std::string>>();
    const auto dims = pre.at("dims").get<std::vector<std::int64_t>>();
    if (labels.size() != dims.size()) {
      throw validation_error("prestate 'labels' and 'dims' lengths differ");
    }
    for (std::size_t k = 0; k < labels.size(); ++k) {
      regs.push_back({labels[k], dims[k]});
    }
    p.prestate.layout = RegisterLayout(std::move(regs));
    const json& amps = pre.at("amplitudes");
    p.prestate.amps = Vec(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t k = 0; k < amps.size(); ++k) {
      p.prestate.amps(static_cast<Eigen::Index>(k)) =
          complex_from_json(amps[k]);
    }
  }

  const json& isos = j["isometries"];
  if (static_cast<int>(isos.size()) != p.rounds + 1) {
    throw validation_error("protocol needs rounds + 1 isometries");
  }
  const json& comm = roles.at("comm");
  if (static_cast<int>(comm.size()) != p.rounds) {
    throw validation_error("roles.comm needs one entry per round");
  }
  for (int i = 0; i < p.rounds; ++i) {
    RoundSpec rs;
    const json& e = isos[static_cast<std::size_t>(i)];
    rs.op.in = decls_from_json(e.at("in"), "isometries.in");
    rs.op.out = decls_from_json(e.at("out"), "isometries.out");
    rs.op.m = matrix_from_json(e.at("matrix"));
    const auto sender = e.at("sender").get<std::string>();
    rs.sender = (sender == "A") ? Party::alice : Party::bob;
    rs.comm = comm[static_cast<std::size_t>(i)].get<std::vector<std::string>>();
    p.round_ops.push_back(std::move(rs));
  }
  {
    const json& e = isos[static_cast<std::size_t>(p.rounds)];
    p.final_op.in = decls_from_json(e.at("in"), "isometries.in");
    p.final_op.out = decls_from_json(e.at("out"), "isometries.out");
    p.final_op.m = matrix_from_json(e.at("matrix"));
  }
  return p;
}

json distribution_to_json(const InputDistribution& mu) {
  json rows = json::array();
  for (std::int64_t x = 0; x < mu.nx; ++x) {
    json row = json::array();
    for (std::int64_t y = 0; y < mu.ny; ++y) row.push_back(mu(x, y));
    rows.push_back(std::move(row));
  }
  return json{{"probs", rows}};
}

InputDistribution distribution_from_json(const json& j) {
  if (!j.contains("probs")) {
    throw validation_error("distribution file needs a 'probs' table");
  }
  const json& rows = j["probs"];
  InputDistribution mu;
  mu.nx = static_cast<std::int64_t>(rows.size());
  if (mu.nx == 0) throw validation_error("'probs' table is empty");
  mu.ny = static_cast<std::int64_t>(rows[0].size());
  for (const auto& row : rows) {
    if (static_cast<std::int64_t>(row.size()) != mu.ny) {
      throw validation_error("'probs' rows have inconsistent lengths");
    }
    for (const auto& v : row) mu.p.push_back(v.get<double>());
  }
  return mu;
}

json table_to_json(const BooleanTable& t) {
  json rows = json::array();
  for (std::int64_t x = 0; x < t.nx; ++x) {
    json row = json::array();
    for (std::int64_t y = 0; y < t.ny; ++y) row.push_back(int(t(x, y)));
    rows.push_back(std::move(row));
  }
  return json{{"x_size", t.nx}, {"y_size", t.ny}, {"values", rows}};
}

BooleanTable table_from_json(const json& j) {
  BooleanTable t;
  if (!j.contains("x_size") || !j.contains("y_size") || !j.contains("values")) {
    throw validation_error(
        "truth-table file needs 'x_size', 'y_size' and 'values'");
  }
  t.nx = j["x_size"].get<std::int64_t>();
  t.ny = j["y_size"].get<std::int64_t>();
  for (const auto& row : j["values"]) {
    for (const auto& v : row) {
      t.v.push_back(static_cast<std::uint8_t>(v.get<int>()));
    }
  }
  t.validate();
  return t;
}

json report_to_json(const QicReport& r) {
  json j;
  json rounds = json::array();
  for (const auto& rc : r.per_round) {
    rounds.push_back({{"round", rc.round},
                      {"sender", party_name(rc.sender)},
                      {"cqmi_contribution", rc.cqmi_contribution}});
  }
  j["per_round"] = rounds;
  j["qic_total"] = r.qic_total;
  j["qcc"] = r.qcc;
  if (r.avg_error.has_value()) j["avg_error"] = *r.avg_error;
  if (r.outputs.has_value()) {
    const OutputTable& ot = *r.outputs;
    json cells = json::array();
    for (std::int64_t x = 0; x < ot.nx; ++x) {
      for (std::int64_t y = 0; y < ot.ny; ++y) {
        for (std::int64_t za = 0; za < ot.nza; ++za) {
          for (std::int64_t zb = 0; zb < ot.nzb; ++zb) {
            const double pr = ot(x, y, za, zb);
            if (pr > 0.0) {
              cells.push_back({{"x", x},
                               {"y", y},
                               {"z_a", za},
                               {"z_b", zb},
                               {"prob", pr}});
            }
          }
        }
      }
    }
    j["output_distribution"] = cells;
  }
  return j;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string make_csv(const std::string& header_comment,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  out << "# " << header_comment << "\n";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << columns[c] << (c + 1 < columns.size() ? "," : "");
  }
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c] << (c + 1 < row.size() ? "," : "");
    }
    out << "\n";
  }
  return out.str();
}

std::string csv_header_comment(std::uint64_t seed, const SimConfig& cfg) {
  std::ostringstream out;
  out << "qicsim " << kVersion << " seed=" << seed
      << " tol_norm=" << fmt_double(cfg.tol_norm)
      << " tol_herm=" << fmt_double(cfg.tol_herm)
      << " tol_psd=" << fmt_double(cfg.tol_psd)
      << " tol_iso=" << fmt_double(cfg.tol_iso) << " dim_cap=" << cfg.dim_cap;
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write file: " + path);
  out << content;
}

}  // namespace qic
