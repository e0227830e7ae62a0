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

#include "qstft/lps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qstft/dstft.hpp"
#include "qstft/error.hpp"
#include "qstft/spectral.hpp"

namespace qstft {

namespace {

void check_region(std::span<const std::size_t> region, std::size_t bound, const char* name) {
  if (region.empty()) throw Error(Errc::invalid_region, std::string(name) + " is empty");
  std::vector<std::size_t> sorted(region.begin(), region.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::invalid_region, std::string(name) + " has a repeated index");
  }
  if (sorted.back() >= bound) {
    throw Error(Errc::invalid_region, std::string(name) + " index " + std::to_string(sorted.back()) +
                                          " out of range (size " + std::to_string(bound) + ")");
  }
  if (sorted.front() != 0) throw Error(Errc::invalid_region, std::string(name) + " must contain the identity");
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

void LocalizationRegions::validate(const Context& ctx) const {
  check_region(C1, ctx.group().order(), "C1");
  check_region(C2, ctx.group().order(), "C2");
  check_region(D, ctx.quotient().size(), "D");
  check_region(Omega, ctx.dual().order(), "Omega");
}

LocalizationRegions LocalizationRegions::full(const Context& ctx) {
  const auto g = all_indices(ctx.group().order());
  return {g, g, all_indices(ctx.quotient().size()), all_indices(ctx.dual().order())};
}

double region_mass(const Context& ctx, std::span<const std::size_t> region) {
  return to_double(ctx.group().point_weight() * static_cast<std::int64_t>(region.size()));
}

GroupFunction normalized_indicator(const Context& ctx, std::span<const std::size_t> region) {
  check_region(region, ctx.group().order(), "region");
  return GroupFunction::indicator(ctx.group_space(), region).scaled(1.0 / std::sqrt(region_mass(ctx, region)));
}

TimeFreqFunction q_project(const Context& ctx, const TimeFreqFunction& coefficients, std::span<const std::size_t> D,
                           std::span<const std::size_t> Omega) {
  ctx.require_grid(coefficients, "Q_R argument");
  check_region(D, ctx.quotient().size(), "D");
  check_region(Omega, ctx.dual().order(), "Omega");
  TimeFreqFunction out = ctx.zero_grid();
  for (std::size_t omega : Omega) {
    for (std::size_t coset : D) out(omega, coset) = coefficients(omega, coset);
  }
  return out;
}

TimeFreqFunction p_project(const Context& ctx, const TimeFreqFunction& coefficients, std::span<const std::size_t> C,
                           const GroupFunction& window) {
  check_region(C, ctx.group().order(), "C");
  const GroupFunction f = left_inverse(ctx, coefficients, window);
  return analyze(ctx, f.times(GroupFunction::indicator(ctx.group_space(), C)), window);
}

OperatorMatrix q_matrix(const Context& ctx, std::span<const std::size_t> D, std::span<const std::size_t> Omega) {
  check_region(D, ctx.quotient().size(), "D");
  check_region(Omega, ctx.dual().order(), "Omega");
  const Space grid = ctx.grid_space();
  Eigen::MatrixXcd entries = Eigen::MatrixXcd::Zero(grid.size, grid.size);
  const std::size_t cols = ctx.quotient().size();
  for (std::size_t omega : Omega) {
    for (std::size_t coset : D) {
      const auto cell = static_cast<Eigen::Index>(omega * cols + coset);
      entries(cell, cell) = 1.0;
    }
  }
  return {grid, grid, std::move(entries)};
}

OperatorMatrix p_matrix(const Context& ctx, std::span<const std::size_t> C, const GroupFunction& window) {
  check_region(C, ctx.group().order(), "C");
  require_nonzero_window(window);
  const Space gs = ctx.group_space();
  Eigen::MatrixXcd mask = Eigen::MatrixXcd::Zero(gs.size, gs.size);
  for (std::size_t x : C) mask(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = 1.0;
  return analysis_matrix(ctx, window)
      .compose(OperatorMatrix{gs, gs, std::move(mask)})
      .compose(left_inverse_matrix(ctx, window));
}

OperatorMatrix lps_operator(const Context& ctx, const LocalizationRegions& regions, const GroupFunction& window) {
  regions.validate(ctx);
  return p_matrix(ctx, regions.C2, window)
      .compose(q_matrix(ctx, regions.D, regions.Omega))
      .compose(p_matrix(ctx, regions.C1, window));
}

MultiplierSpec lps_multiplier_spec(const Context& ctx, const LocalizationRegions& regions,
                                   const GroupFunction& window) {
  regions.validate(ctx);
  TimeFreqFunction sigma = ctx.zero_grid();
  for (std::size_t omega : regions.Omega) {
    for (std::size_t coset : regions.D) sigma(omega, coset) = 1.0;
  }
  return {std::move(sigma), normalized_indicator(ctx, regions.C1), normalized_indicator(ctx, regions.C2), window};
}

EquivalenceReport equivalence_check(const Context& ctx, const LocalizationRegions& regions,
                                    const GroupFunction& window) {
  const OperatorMatrix lps = lps_operator(ctx, regions, window);
  const MultiplierSpec spec = lps_multiplier_spec(ctx, regions, window);
  const OperatorMatrix analysis = analysis_matrix(ctx, window);
  const OperatorMatrix inverse = left_inverse_matrix(ctx, window);

  EquivalenceReport report;
  report.alpha = std::sqrt(region_mass(ctx, regions.C1) * region_mass(ctx, regions.C2));
  const double g2 = window.norm(2.0);
  const OperatorMatrix multiplier = analysis.compose(two_wavelet_matrix(ctx, spec))
                                        .compose(inverse)
                                        .scaled(report.alpha / (g2 * g2));
  const OperatorMatrix range = analysis.compose(inverse);
  const OperatorMatrix difference = lps.minus(multiplier);

  report.lps_norm = schatten_norm(lps, kInf);
  report.multiplier_norm = schatten_norm(multiplier, kInf);
  report.residual_full = schatten_norm(difference, kInf);
  report.residual_range = schatten_norm(range.compose(difference).compose(range), kInf);
  const double scale = std::max(report.lps_norm, report.multiplier_norm);
  report.pass = report.residual_full <= 1e-9 * scale && report.residual_range <= 1e-9 * scale;
  return report;
}

}  // namespace qstft
