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

// qstft run --config <path> --out <path> [--seed N] [--suites a,b,c] [--trials N]
//
// Exit status: 0 every check passed, 1 some check failed, 2 bad config or
// arguments, 3 the report could not be written.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qstft/error.hpp"
#include "qstft/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quotient-window time-frequency checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qstft::kVersion);

  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::vector<std::string> suites;
  bool quiet = false;

  auto* run = app.add_subcommand("run", "run the configured suites and write a JSON report");
  run->add_option("--config", config_path, "config JSON")->required();
  run->add_option("--out", out_path, "report path")->required();
  run->add_option("--seed", seed, "override the config seed");
  run->add_option("--suites", suites, "comma-separated suite subset")->delimiter(',');
  run->add_option("--trials", trials, "override the sampled lower-bound trial count")->check(CLI::PositiveNumber);
  run->add_flag("--quiet", quiet, "suppress the summary line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  qstft::SuiteConfig config;
  try {
    config = qstft::load_config(config_path);
    if (seed) config.seed = *seed;
    if (trials) config.trials = *trials;
    if (!suites.empty()) {
      config.suites.clear();
      for (const auto& name : suites) {
        const auto suite = qstft::suite_from_string(name);
        if (!suite) throw qstft::Error(qstft::Errc::config, "--suites: unknown suite \"" + name + "\"");
        config.suites.push_back(*suite);
      }
    }
  } catch (const qstft::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  const auto report = qstft::run_suite(config);
  try {
    qstft::emit_report(report, out_path, qstft::utc_timestamp());
  } catch (const qstft::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  }
  if (!quiet) {
    std::printf("%zu checks, %zu failed -> %s\n", report.records.size(), report.failures(), out_path.c_str());
  }
  return report.pass() ? kExitPass : kExitFail;
}
