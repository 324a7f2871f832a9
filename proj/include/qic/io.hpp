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

// Single-header nlohmann/json from vendor/.
#include "json.hpp"

#include "qic/discrepancy.hpp"
#include "qic/protocol.hpp"

namespace qic {

using json = nlohmann::json;

// Complex numbers serialize as [re, im]; matrices as row-major nested
// arrays. Shared by every file format in the repo.
json complex_to_json(const cx& z);
cx complex_from_json(const json& j);
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

json protocol_to_json(const ProtocolSpec& p);
ProtocolSpec protocol_from_json(const json& j);

json distribution_to_json(const InputDistribution& mu);
InputDistribution distribution_from_json(const json& j);

json table_to_json(const BooleanTable& t);
BooleanTable table_from_json(const json& j);

json report_to_json(const QicReport& r);

/// Formats a double with 12 significant digits (the repo's tabular
/// convention).
std::string fmt_double(double v);

/// CSV with a leading comment row carrying version, seed, tolerances and
/// dim_cap. Rows are emitted in the order given.
std::string make_csv(const std::string& header_comment,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows);

std::string csv_header_comment(std::uint64_t seed, const SimConfig& cfg);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qic
