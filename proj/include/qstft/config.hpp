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

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qstft/corpus.hpp"
#include "qstft/harmonic.hpp"
#include "qstft/lps.hpp"
#include "qstft/radon.hpp"

namespace qstft {

enum class Suite { weil, slice, stft, dstft_ortho, inversion, multiplier, schatten, lp_bounds, schur, trace, lps, radon };

inline constexpr Suite kAllSuites[] = {Suite::weil,       Suite::slice,    Suite::stft,    Suite::dstft_ortho,
                                       Suite::inversion,  Suite::multiplier, Suite::schatten, Suite::lp_bounds,
                                       Suite::schur,      Suite::trace,    Suite::lps,     Suite::radon};

std::string_view to_string(Suite suite);
std::optional<Suite> suite_from_string(std::string_view name);

struct GroupConfig {
  std::vector<std::int64_t> factors;
  std::vector<GroupElement> generators;
  Weight weight{1};
  std::optional<LocalizationRegions> regions;
  std::shared_ptr<const Context> context;
  /// e.g. "Z2xZ4/<(0,2)>".
  std::string label;
};

struct InputConfig {
  FunctionSpec g;
  FunctionSpec u;
  FunctionSpec v;
  FunctionSpec sigma;
};

struct RadonConfig {
  std::vector<std::int64_t> sizes{4, 6};
  std::optional<Image> image;
};

struct SuiteConfig {
  std::vector<GroupConfig> groups;
  InputConfig inputs;
  std::vector<Suite> suites;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  /// Seeded cases per group and suite.
  std::size_t cases = 8;
  std::map<std::string, double> tolerances;
  RadonConfig radon;

  double tolerance(const std::string& key) const { return tolerances.at(key); }
};

/// Tolerance keys and their defaults.
const std::map<std::string, double>& default_tolerances();

/// Parses and validates a config document. Errors carry a JSON pointer to the
/// offending value; structural problems use Errc::config, group and element
/// problems keep their own codes.
SuiteConfig parse_config(std::string_view text);
SuiteConfig load_config(const std::filesystem::path& path);

/// Normalized config (defaults filled in) for the report.
nlohmann::json config_echo(const SuiteConfig& config);

std::string group_label(const Context& ctx);

}  // namespace qstft
