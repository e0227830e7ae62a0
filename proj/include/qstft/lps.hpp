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

#include <cstddef>
#include <span>
#include <vector>

#include "qstft/operators.hpp"

namespace qstft {

/// Index sets for the time-side regions C1, C2 (subsets of G), the coset set
/// D (subset of G/H) and the frequency set Omega (subset of G^).
struct LocalizationRegions {
  std::vector<std::size_t> C1;
  std::vector<std::size_t> C2;
  std::vector<std::size_t> D;
  std::vector<std::size_t> Omega;

  /// Each set must be nonempty, duplicate-free, in range and contain the
  /// identity (index 0). Throws invalid_region otherwise.
  void validate(const Context& ctx) const;
  static LocalizationRegions full(const Context& ctx);
};

/// Haar mass count * w_G of a subset of G.
double region_mass(const Context& ctx, std::span<const std::size_t> region);
/// chi_C / sqrt(|C|), a unit vector in L^2(G).
GroupFunction normalized_indicator(const Context& ctx, std::span<const std::size_t> region);

/// Q_R F = chi_{D x Omega} F (rows Omega, columns D).
TimeFreqFunction q_project(const Context& ctx, const TimeFreqFunction& coefficients, std::span<const std::size_t> D,
                           std::span<const std::size_t> Omega);
/// P_C F = D(chi_C D^-1 F) with D^-1 the left inverse.
TimeFreqFunction p_project(const Context& ctx, const TimeFreqFunction& coefficients, std::span<const std::size_t> C,
                           const GroupFunction& window);

OperatorMatrix q_matrix(const Context& ctx, std::span<const std::size_t> D, std::span<const std::size_t> Omega);
OperatorMatrix p_matrix(const Context& ctx, std::span<const std::size_t> C, const GroupFunction& window);
/// P_{C2} Q_{D x Omega} P_{C1} on the grid.
OperatorMatrix lps_operator(const Context& ctx, const LocalizationRegions& regions, const GroupFunction& window);

/// The two-wavelet multiplier with sigma = chi_{D x Omega} and the normalized
/// indicators of C1, C2 as u, v.
MultiplierSpec lps_multiplier_spec(const Context& ctx, const LocalizationRegions& regions,
                                   const GroupFunction& window);

struct EquivalenceReport {
  /// sqrt(|C1| |C2|).
  double alpha = 0.0;
  /// ||L - (alpha/||g||^2) D P D^-1||_S_inf on the whole grid.
  double residual_full = 0.0;
  /// The same difference compressed to the range of D by the projection D D^-1.
  double residual_range = 0.0;
  double lps_norm = 0.0;
  double multiplier_norm = 0.0;
  bool pass = false;
};

/// Both residuals must be at most 1e-9 times the larger of the two norms.
EquivalenceReport equivalence_check(const Context& ctx, const LocalizationRegions& regions,
                                    const GroupFunction& window);

}  // namespace qstft
