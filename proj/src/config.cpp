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

#include "qstft/config.hpp"

#include <fstream>
#include <sstream>

#include "qstft/error.hpp"

namespace qstft {

namespace {

using nlohmann::json;

constexpr std::string_view kSuiteNames[] = {"weil",       "slice",    "stft",      "dstft_ortho",
                                            "inversion",  "multiplier", "schatten", "lp_bounds",
                                            "schur",      "trace",    "lps",       "radon"};

[[noreturn]] void fail(const std::string& pointer, const std::string& message, Errc code = Errc::config) {
  throw Error(code, (pointer.empty() ? std::string("/") : pointer) + ": " + message);
}

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

void reject_unknown_keys(const json& object, const std::string& pointer, std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : object.items()) {
    bool found = false;
    for (auto name : known) found = found || key == name;
    if (!found) fail(child(pointer, key), "unknown key \"" + key + "\"");
  }
}

const json& require_array(const json& value, const std::string& pointer) {
  if (!value.is_array()) fail(pointer, "expected an array");
  return value;
}

std::int64_t as_integer(const json& value, const std::string& pointer) {
  if (!value.is_number_integer()) fail(pointer, "expected an integer");
  return value.get<std::int64_t>();
}

std::size_t as_count(const json& value, const std::string& pointer) {
  if (!value.is_number_unsigned()) fail(pointer, "expected a nonnegative integer");
  return value.get<std::size_t>();
}

double as_number(const json& value, const std::string& pointer) {
  if (!value.is_number()) fail(pointer, "expected a number");
  return value.get<double>();
}

std::vector<std::size_t> as_index_list(const json& value, const std::string& pointer) {
  std::vector<std::size_t> out;
  const auto& array = require_array(value, pointer);
  for (std::size_t i = 0; i < array.size(); ++i) out.push_back(as_count(array[i], child(pointer, i)));
  return out;
}

Weight parse_weight(const json& value, const std::string& pointer) {
  if (value.is_number_integer()) {
    const auto n = value.get<std::int64_t>();
    if (n <= 0) fail(pointer, "weight must be positive", Errc::invalid_factors);
    return Weight{n};
  }
  if (value.is_array() && value.size() == 2) {
    const auto num = as_integer(value[0], child(pointer, 0));
    const auto den = as_integer(value[1], child(pointer, 1));
    if (num <= 0 || den <= 0) fail(pointer, "weight must be positive", Errc::invalid_factors);
    return Weight{num, den};
  }
  fail(pointer, "weight must be a positive integer or [numerator, denominator]");
}

std::size_t region_index(const Context& ctx, const json& value, const std::string& pointer, std::size_t bound,
                         bool group_elements) {
  if (value.is_array() && group_elements) {
    GroupElement x;
    for (std::size_t i = 0; i < value.size(); ++i) x.push_back(as_integer(value[i], child(pointer, i)));
    if (!ctx.group().is_valid(x)) fail(pointer, "not an element of the group", Errc::invalid_region);
    return ctx.group().index_of(x);
  }
  const auto index = as_count(value, pointer);
  if (index >= bound) fail(pointer, "index out of range", Errc::invalid_region);
  return index;
}

LocalizationRegions parse_regions(const Context& ctx, const json& value, const std::string& pointer) {
  if (!value.is_object()) fail(pointer, "expected an object");
  reject_unknown_keys(value, pointer, {"C1", "C2", "D", "Omega"});
  LocalizationRegions regions;
  auto read = [&](const char* key, std::size_t bound, bool elements) {
    std::vector<std::size_t> out;
    if (!value.contains(key)) fail(child(pointer, key), "missing region", Errc::invalid_region);
    const auto& array = require_array(value.at(key), child(pointer, key));
    for (std::size_t i = 0; i < array.size(); ++i) {
      out.push_back(region_index(ctx, array[i], child(child(pointer, key), i), bound, elements));
    }
    return out;
  };
  regions.C1 = read("C1", ctx.group().order(), true);
  regions.C2 = read("C2", ctx.group().order(), true);
  regions.D = read("D", ctx.quotient().size(), false);
  regions.Omega = read("Omega", ctx.dual().order(), true);
  try {
    regions.validate(ctx);
  } catch (const Error& e) {
    fail(pointer, e.what(), e.code());
  }
  return regions;
}

GroupConfig parse_group(const json& value, const std::string& pointer) {
  if (!value.is_object()) fail(pointer, "expected an object");
  reject_unknown_keys(value, pointer, {"factors", "subgroup", "weight", "regions"});
  GroupConfig group;
  if (!value.contains("factors")) fail(child(pointer, "factors"), "missing");
  const auto& factors = require_array(value.at("factors"), child(pointer, "factors"));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto n = as_integer(factors[i], child(child(pointer, "factors"), i));
    if (n <= 0) fail(child(child(pointer, "factors"), i), "factor must be positive", Errc::invalid_factors);
    group.factors.push_back(n);
  }
  if (value.contains("weight")) group.weight = parse_weight(value.at("weight"), child(pointer, "weight"));
  const FiniteGroup base = build_group(group.factors, group.weight);

  if (value.contains("subgroup")) {
    const std::string sp = child(pointer, "subgroup");
    const auto& gens = require_array(value.at("subgroup"), sp);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto& gen = require_array(gens[i], child(sp, i));
      if (gen.size() != base.rank()) {
        fail(child(sp, i), "generator needs " + std::to_string(base.rank()) + " components", Errc::invalid_element);
      }
      GroupElement x;
      for (std::size_t j = 0; j < gen.size(); ++j) x.push_back(as_integer(gen[j], child(child(sp, i), j)));
      if (!base.is_valid(x)) fail(child(sp, i), "generator is not an element of the group", Errc::invalid_element);
      group.generators.push_back(std::move(x));
    }
  }
  group.context = std::make_shared<const Context>(base, generate_subgroup(base, group.generators));
  group.label = group_label(*group.context);
  if (value.contains("regions")) group.regions = parse_regions(*group.context, value.at("regions"), child(pointer, "regions"));
  return group;
}

Complex parse_complex(const json& value, const std::string& pointer) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_array() && value.size() == 2) {
    return {as_number(value[0], child(pointer, 0)), as_number(value[1], child(pointer, 1))};
  }
  fail(pointer, "expected a number or [re, im]");
}

FunctionSpec parse_function(const json& value, const std::string& pointer) {
  FunctionSpec spec;
  auto preset_from = [&](const std::string& name, const std::string& where) {
    if (name == "delta") return Preset::delta;
    if (name == "constant") return Preset::constant;
    if (name == "indicator") return Preset::indicator;
    if (name == "seeded-random-complex" || name == "random") return Preset::random;
    fail(where, "unknown preset \"" + name + "\"");
  };
  if (value.is_string()) {
    spec.preset = preset_from(value.get<std::string>(), pointer);
    if (spec.preset == Preset::indicator) fail(pointer, "indicator needs a support list");
    return spec;
  }
  if (!value.is_object()) fail(pointer, "expected a preset name or object");
  reject_unknown_keys(value, pointer, {"preset", "index", "value", "support"});
  if (!value.contains("preset") || !value.at("preset").is_string()) fail(child(pointer, "preset"), "missing preset name");
  spec.preset = preset_from(value.at("preset").get<std::string>(), child(pointer, "preset"));
  if (value.contains("index")) spec.index = as_count(value.at("index"), child(pointer, "index"));
  if (value.contains("value")) spec.value = parse_complex(value.at("value"), child(pointer, "value"));
  if (value.contains("support")) spec.support = as_index_list(value.at("support"), child(pointer, "support"));
  if (spec.preset == Preset::indicator && spec.support.empty()) fail(child(pointer, "support"), "indicator needs a support list");
  return spec;
}

json function_echo(const FunctionSpec& spec) {
  json out = {{"preset", to_string(spec.preset)}};
  switch (spec.preset) {
    case Preset::delta: out["index"] = spec.index; break;
    case Preset::constant: out["value"] = json::array({spec.value.real(), spec.value.imag()}); break;
    case Preset::indicator: out["support"] = spec.support; break;
    case Preset::random: break;
  }
  return out;
}

std::string element_text(const GroupElement& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
  return out + ")";
}

}  // namespace

std::string_view to_string(Suite suite) { return kSuiteNames[static_cast<std::size_t>(suite)]; }

std::optional<Suite> suite_from_string(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kSuiteNames); ++i) {
    if (kSuiteNames[i] == name) return static_cast<Suite>(i);
  }
  return std::nullopt;
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> defaults = {
      {"weil", 1e-12},        {"slice", 1e-12},      {"fourier", 1e-12},   {"stft", 1e-10},
      {"three_forms", 1e-10}, {"orthogonality", 1e-10}, {"inversion", 1e-10}, {"multiplier", 1e-10},
      {"adjoint", 1e-10},     {"trace", 1e-10},      {"eigen_trace", 1e-8}, {"projection", 1e-10},
      {"equivalence", 1e-9},  {"radon_oracle", 1e-12}, {"radon_roundtrip", 1e-10},
  };
  return defaults;
}

std::string group_label(const Context& ctx) {
  std::string out;
  for (std::size_t i = 0; i < ctx.group().rank(); ++i) {
    out += (i ? "xZ" : "Z") + std::to_string(ctx.group().factors()[i]);
  }
  out += "/<";
  const auto& gens = ctx.subgroup().generators();
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + element_text(gens[i]);
  out += ">";
  if (ctx.group().point_weight() != Weight{1}) {
    const auto w = ctx.group().point_weight();
    out += " w=" + std::to_string(w.numerator()) + (w.denominator() == 1 ? "" : "/" + std::to_string(w.denominator()));
  }
  return out;
}

SuiteConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "config must be a JSON object");
  reject_unknown_keys(doc, "", {"groups", "inputs", "suites", "seed", "trials", "cases", "tolerances", "radon"});

  SuiteConfig config;
  config.tolerances = default_tolerances();

  if (!doc.contains("groups")) fail("/groups", "missing");
  const auto& groups = require_array(doc.at("groups"), "/groups");
  if (groups.empty()) fail("/groups", "at least one group is required");
  for (std::size_t i = 0; i < groups.size(); ++i) config.groups.push_back(parse_group(groups[i], child("/groups", i)));

  if (!doc.contains("suites")) fail("/suites", "missing");
  const auto& suites = require_array(doc.at("suites"), "/suites");
  if (suites.empty()) fail("/suites", "at least one suite is required");
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const std::string sp = child("/suites", i);
    if (!suites[i].is_string()) fail(sp, "expected a suite name");
    const auto name = suites[i].get<std::string>();
    const auto suite = suite_from_string(name);
    if (!suite) fail(sp, "unknown suite \"" + name + "\"");
    if (std::find(config.suites.begin(), config.suites.end(), *suite) != config.suites.end()) {
      fail(sp, "suite \"" + name + "\" listed twice");
    }
    config.suites.push_back(*suite);
  }

  if (doc.contains("inputs")) {
    const auto& inputs = doc.at("inputs");
    if (!inputs.is_object()) fail("/inputs", "expected an object");
    reject_unknown_keys(inputs, "/inputs", {"g", "u", "v", "sigma"});
    if (inputs.contains("g")) config.inputs.g = parse_function(inputs.at("g"), "/inputs/g");
    if (inputs.contains("u")) config.inputs.u = parse_function(inputs.at("u"), "/inputs/u");
    if (inputs.contains("v")) config.inputs.v = parse_function(inputs.at("v"), "/inputs/v");
    if (inputs.contains("sigma")) config.inputs.sigma = parse_function(inputs.at("sigma"), "/inputs/sigma");
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) fail("/seed", "expected a nonnegative integer");
    config.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("trials")) {
    config.trials = as_count(doc.at("trials"), "/trials");
    if (config.trials == 0) fail("/trials", "trials must be at least 1");
  }
  if (doc.contains("cases")) {
    config.cases = as_count(doc.at("cases"), "/cases");
    if (config.cases == 0) fail("/cases", "cases must be at least 1");
  }
  if (doc.contains("tolerances")) {
    const auto& tolerances = doc.at("tolerances");
    if (!tolerances.is_object()) fail("/tolerances", "expected an object");
    for (const auto& [key, value] : tolerances.items()) {
      const std::string tp = child("/tolerances", key);
      if (!config.tolerances.contains(key)) fail(tp, "unknown tolerance \"" + key + "\"");
      const double tol = as_number(value, tp);
      if (!(tol >= 0.0)) fail(tp, "tolerance must be nonnegative");
      config.tolerances[key] = tol;
    }
  }
  if (doc.contains("radon")) {
    const auto& radon = doc.at("radon");
    if (!radon.is_object()) fail("/radon", "expected an object");
    reject_unknown_keys(radon, "/radon", {"sizes", "image"});
    if (radon.contains("sizes")) {
      config.radon.sizes.clear();
      const auto& sizes = require_array(radon.at("sizes"), "/radon/sizes");
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        const auto n = as_integer(sizes[i], child("/radon/sizes", i));
        if (n < 2) fail(child("/radon/sizes", i), "image size must be at least 2", Errc::invalid_factors);
        config.radon.sizes.push_back(n);
      }
    }
    if (radon.contains("image")) {
      const auto& rows = require_array(radon.at("image"), "/radon/image");
      Image image;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = require_array(rows[i], child("/radon/image", i));
        if (row.size() != rows.size()) fail(child("/radon/image", i), "image must be square");
        std::vector<double> pixels;
        for (std::size_t j = 0; j < row.size(); ++j) pixels.push_back(as_number(row[j], child(child("/radon/image", i), j)));
        image.push_back(std::move(pixels));
      }
      if (image.size() < 2) fail("/radon/image", "image must be at least 2 x 2");
      config.radon.image = std::move(image);
    }
  }
  return config;
}

SuiteConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::config, "cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

json config_echo(const SuiteConfig& config) {
  json groups = json::array();
  for (const auto& group : config.groups) {
    json entry = {{"factors", group.factors},
                  {"subgroup", group.generators},
                  {"weight", json::array({group.weight.numerator(), group.weight.denominator()})},
                  {"label", group.label}};
    if (group.regions) {
      entry["regions"] = {{"C1", group.regions->C1},
                          {"C2", group.regions->C2},
                          {"D", group.regions->D},
                          {"Omega", group.regions->Omega}};
    }
    groups.push_back(std::move(entry));
  }
  json suites = json::array();
  for (Suite suite : config.suites) suites.push_back(std::string(to_string(suite)));
  json radon = {{"sizes", config.radon.sizes}};
  if (config.radon.image) radon["image"] = *config.radon.image;
  return {{"groups", groups},
          {"inputs",
           {{"g", function_echo(config.inputs.g)},
            {"u", function_echo(config.inputs.u)},
            {"v", function_echo(config.inputs.v)},
            {"sigma", function_echo(config.inputs.sigma)}}},
          {"suites", suites},
          {"seed", config.seed},
          {"trials", config.trials},
          {"cases", config.cases},
          {"tolerances", config.tolerances},
          {"radon", radon}};
}

}  // namespace qstft
