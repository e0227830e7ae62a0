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

#include "qstft/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "qstft/error.hpp"

namespace qstft {

namespace {

using nlohmann::json;

std::string_view kind_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::equality: return "equality";
    case CheckKind::bound: return "bound";
    case CheckKind::expect: return "expect";
  }
  return "unknown";
}

json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

void write_string(std::string& out, const std::string& s) {
  out += json(s).dump(-1, ' ', false, json::error_handler_t::replace);
}

void write(std::string& out, const json& value, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (value.type()) {
    case json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      // nlohmann's default object type is an ordered std::map, so iteration is sorted.
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_string(out, key);
        out += ": ";
        write(out, item, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write(out, value[i], depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case json::value_t::number_float: {
      const double x = value.get<double>();
      if (!std::isfinite(x)) {
        write(out, number(x), depth);
        return;
      }
      char buffer[32];
      std::snprintf(buffer, sizeof buffer, "%.17g", x);
      out += buffer;
      return;
    }
    case json::value_t::string:
      write_string(out, value.get<std::string>());
      return;
    default:
      out += value.dump();
  }
}

}  // namespace

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.pass ? 0 : 1;
  return n;
}

json report_json(const Report& report, const std::string& timestamp) {
  json records = json::array();
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_suite;
  for (const auto& r : report.records) {
    json details = json::object();
    for (const auto& [key, value] : r.details) details[key] = number(value);
    json entry = {{"suite", std::string(to_string(r.suite))},
                  {"group", r.group},
                  {"group_label", r.group_label},
                  {"case", r.case_index},
                  {"check", r.check},
                  {"anchor", r.anchor},
                  {"inputs_digest", r.digest},
                  {"kind", std::string(kind_name(r.kind))},
                  {"lhs", number(r.lhs)},
                  {"rhs", number(r.rhs)},
                  {"residual", number(r.residual)},
                  {"tolerance", number(r.tolerance)},
                  {"pass", r.pass},
                  {"details", details}};
    if (!r.error.empty()) entry["error"] = r.error;
    records.push_back(std::move(entry));
    auto& counts = by_suite[std::string(to_string(r.suite))];
    ++counts.first;
    counts.second += r.pass ? 0 : 1;
  }
  json suites = json::object();
  for (const auto& [name, counts] : by_suite) {
    suites[name] = {{"total", counts.first}, {"failed", counts.second}, {"pass", counts.second == 0}};
  }
  return {{"schema_version", kReportSchemaVersion},
          {"version", kVersion},
          {"timestamp", timestamp},
          {"config", report.config},
          {"summary",
           {{"total", report.records.size()},
            {"passed", report.records.size() - report.failures()},
            {"failed", report.failures()},
            {"pass", report.pass()},
            {"suites", suites}}},
          {"records", records}};
}

std::string canonical_json(const json& value) {
  std::string out;
  write(out, value, 0);
  return out;
}

void emit_report(const Report& report, const std::filesystem::path& path, const std::string& timestamp) {
  const std::string text = canonical_json(report_json(report, timestamp)) + "\n";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io, "cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(Errc::io, "failed writing " + path.string());
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

}  // namespace qstft
