// SPDX-License-Identifier: Apache-2.0
//
// qstft: quotient-window time-frequency analysis on finite abelian groups
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qstft/config.hpp"

namespace qstft {

inline constexpr const char* kReportSchemaVersion = "1.0.0";
inline constexpr const char* kVersion = "1.0.0";

enum class CheckKind {
  equality,  ///< residual is a relative difference, pass iff residual <= tolerance
  bound,     ///< pass iff lhs <= rhs (1 + 1e-9) + 1e-12 (and every extra right side)
  expect,    ///< a precondition that must raise; lhs/rhs unused
};

struct Record {
  Suite suite{};
  std::size_t group = 0;
  std::size_t case_index = 0;
  std::string check;
  std::string anchor;
  std::string group_label;
  std::string digest;
  CheckKind kind = CheckKind::equality;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::map<std::string, double> details;
  std::string error;
};

struct Report {
  std::vector<Record> records;
  nlohmann::json config;

  bool pass() const;
  std::size_t failures() const;
};

/// Runs every selected suite over groups x cases. Module errors inside a
/// check become failed records carrying the message.
Report run_suite(const SuiteConfig& config);

/// Records of one suite only; used by the acceptance harness.
std::vector<Record> run_one(const SuiteConfig& config, Suite suite);

nlohmann::json report_json(const Report& report, const std::string& timestamp);
/// Sorted keys, two-space indentation, one key per line, doubles as %.17g and
/// non-finite doubles as the strings "inf", "-inf", "nan".
std::string canonical_json(const nlohmann::json& value);
/// Writes canonical_json(report_json(...)) plus a trailing newline. Throws
/// Errc::io when the file cannot be written.
void emit_report(const Report& report, const std::filesystem::path& path, const std::string& timestamp);
/// UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace qstft
