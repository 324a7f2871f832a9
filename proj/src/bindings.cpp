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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qic/builtins.hpp"
#include "qic/compose.hpp"
#include "qic/discrepancy.hpp"
#include "qic/info.hpp"
#include "qic/verify.hpp"

namespace py = pybind11;
using namespace qic;

namespace {

InputDistribution dist_from_rows(const std::vector<std::vector<double>>& rows) {
  InputDistribution mu;
  mu.nx = static_cast<std::int64_t>(rows.size());
  mu.ny = rows.empty() ? 0 : static_cast<std::int64_t>(rows[0].size());
  for (const auto& row : rows) {
    if (static_cast<std::int64_t>(row.size()) != mu.ny) {
      throw validation_error("probability rows have inconsistent lengths");
    }
    mu.p.insert(mu.p.end(), row.begin(), row.end());
  }
  mu.validate();
  return mu;
}

BooleanTable table_from_rows(const std::vector<std::vector<int>>& rows) {
  BooleanTable t;
  t.nx = static_cast<std::int64_t>(rows.size());
  t.ny = rows.empty() ? 0 : static_cast<std::int64_t>(rows[0].size());
  for (const auto& row : rows) {
    for (int v : row) t.v.push_back(static_cast<std::uint8_t>(v));
  }
  t.validate();
  return t;
}

TaskSpec task_by_name(const std::string& name, int n) {
  if (name == "and") return and_task();
  if (name == "disj") return disj_task(n);
  throw validation_error("unknown task '" + name + "'");
}

py::dict report_to_dict(const QicReport& rep) {
  py::dict d;
  py::list rounds;
  for (const auto& rc : rep.per_round) {
    rounds.append(py::make_tuple(rc.round, party_name(rc.sender),
                                 rc.cqmi_contribution));
  }
  d["per_round"] = rounds;
  d["qic_total"] = rep.qic_total;
  d["qcc"] = rep.qcc;
  if (rep.avg_error.has_value()) d["avg_error"] = *rep.avg_error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qicsim, m) {
  m.doc() = "Exact simulator for two-party interactive quantum protocols: "
            "quantum information cost, communication cost, error, and "
            "discrepancy bounds for tiny boolean functions.";

  py::class_<ProtocolSpec>(m, "Protocol")
      .def_property_readonly("rounds",
                             [](const ProtocolSpec& p) { return p.rounds; })
      .def_property_readonly("x_size", &ProtocolSpec::x_size)
      .def_property_readonly("y_size", &ProtocolSpec::y_size)
      .def("qcc", [](const ProtocolSpec& p) { return qcc(p); });

  m.def("and_protocol",
        [](int r) { return build_and_protocol({r}); }, py::arg("r"),
        "The 4r-message exact AND protocol with angle pi/(8r).");
  m.def("dummy_protocol",
        [](int rounds, std::int64_t dim) { return build_dummy(rounds, dim); },
        py::arg("rounds"), py::arg("dim") = 2);
  m.def("classical_and_protocol",
        []() { return build_classical_exchange(and_task()); });
  m.def("disj_protocol",
        [](int r, int n) { return build_disj_from_and({r}, n); }, py::arg("r"),
        py::arg("n"));
  m.def("parallel", &parallel, py::arg("p1"), py::arg("p2"));
  m.def("repeat", &repeat_n, py::arg("p"), py::arg("n"));

  m.def("mu_star", []() {
    return std::vector<std::vector<double>>{{1.0 / 3, 1.0 / 3},
                                            {1.0 / 3, 0.0}};
  });

  m.def(
      "qic_report",
      [](const ProtocolSpec& p, const std::vector<std::vector<double>>& probs,
         std::int64_t dim_cap) {
        SimConfig cfg;
        cfg.dim_cap = dim_cap;
        return report_to_dict(qic(p, dist_from_rows(probs), cfg));
      },
      py::arg("protocol"), py::arg("probs"), py::arg("dim_cap") = 1 << 21,
      "Per-round information contributions, QIC total and QCC.");
  m.def(
      "avg_error",
      [](const ProtocolSpec& p, const std::vector<std::vector<double>>& probs,
         const std::string& task, int n) {
        return avg_error(p, dist_from_rows(probs), task_by_name(task, n),
                         SimConfig{});
      },
      py::arg("protocol"), py::arg("probs"), py::arg("task") = "and",
      py::arg("n") = 2);
  m.def(
      "worst_case_error",
      [](const ProtocolSpec& p, const std::string& task, int n) {
        return worst_case_error(p, task_by_name(task, n), SimConfig{});
      },
      py::arg("protocol"), py::arg("task") = "and", py::arg("n") = 2);

  m.def("binary_entropy", &binary_entropy, py::arg("p"));
  m.def(
      "and_round_entropy",
      [](int i, int r, double w, const std::string& branch) {
        return and_round_entropy(i, {r}, w,
                                 branch == "y0" ? AndBranch::y_equals_0
                                                : AndBranch::y_equals_1);
      },
      py::arg("message_index"), py::arg("r"), py::arg("w"),
      py::arg("branch") = "y1");

  m.def(
      "disc",
      [](const std::vector<std::vector<int>>& table,
         const std::vector<std::vector<double>>& probs) {
        const DiscResult d = disc_fast(table_from_rows(table),
                                       dist_from_rows(probs));
        return py::make_tuple(d.value, d.rows, d.cols);
      },
      py::arg("table"), py::arg("probs"),
      "Rectangle discrepancy (value, row_mask, col_mask).");
  m.def(
      "gdm_delta",
      [](const std::vector<std::vector<int>>& table,
         const std::vector<std::vector<double>>& probs, double delta) {
        const GdmResult r =
            gdm_delta(table_from_rows(table), dist_from_rows(probs), delta);
        std::vector<std::vector<int>> g;
        for (std::int64_t x = 0; x < r.witness_g.nx; ++x) {
          std::vector<int> row;
          for (std::int64_t y = 0; y < r.witness_g.ny; ++y) {
            row.push_back(r.witness_g(x, y));
          }
          g.push_back(std::move(row));
        }
        return py::make_tuple(r.value, g);
      },
      py::arg("table"), py::arg("probs"), py::arg("delta") = 0.0);

  m.def(
      "verify",
      [](const std::string& suite, int trials, std::uint64_t seed) {
        py::list out;
        for (const auto& r : verify_suite(suite, trials, seed)) {
          out.append(py::make_tuple(r.suite, r.name, r.trials, r.failures,
                                    r.worst));
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("trials") = 20, py::arg("seed") = 7);

  m.attr("__version__") = kVersion;
}
