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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qstft/operators.hpp"

namespace qstft {

/// Norm inequalities for the two-wavelet multiplier P = P_{u,v,g}(sigma).
/// Names give the norm on the left and the symbol class on the right.
enum class Theorem {
  schatten_inf_l1_symbol,    ///< ||P||_S_inf <= ||sigma||_1 ||g||_inf^2            (unit u, v)
  schatten_inf_linf_symbol,  ///< ||P||_S_inf <= ||u||_inf ||v||_inf ||g||_2^2 ||sigma||_inf
  schatten_inf_lp_symbol,    ///< Riesz-Thorin between the two above, p in [1, inf]
  schatten_2_l1_symbol,      ///< ||P||_S_2 <= ||g||_inf ||sigma||_1                 (unit u, v)
  schatten_1_l1_symbol,      ///< ||P||_S_1 <= ||sigma||_1 ||g||_2^2                 (unit u, v)
  schatten_p_lp_symbol,      ///< ||P||_S_p with the interpolated constant, p in [1, inf]
  lp_l1_endpoint,            ///< ||P||_{L^1} <= ||u||_inf ||v||_1 ||g||_inf^2 ||sigma||_1
  lp_linf_endpoint,          ///< ||P||_{L^inf} <= ||u||_1 ||v||_inf ||g||_2^2 ||sigma||_1
  lp_endpoint_interpolation, ///< L^p bound interpolating the two endpoints, p in [1, inf]
  lp_schur,                  ///< Schur test on the kernel N(t; s), p in [1, inf]
  lp_riesz_duality,          ///< ||P||_{L^p} <= ||u||_p' ||v||_p ||g||_inf^2 ||sigma||_1, p in [1, inf]
  lp_multilinear,            ///< sigma in L^r, r in [1, 2], p in [r, r'], constant c1^t c2^(1-t)
  lp_holder,                 ///< sigma in L^r, r in [1, 2), p in [r, r'], t = (r-p)/(p(r-2))
};

inline constexpr Theorem kAllTheorems[] = {
    Theorem::schatten_inf_l1_symbol, Theorem::schatten_inf_linf_symbol, Theorem::schatten_inf_lp_symbol,
    Theorem::schatten_2_l1_symbol,   Theorem::schatten_1_l1_symbol,     Theorem::schatten_p_lp_symbol,
    Theorem::lp_l1_endpoint,         Theorem::lp_linf_endpoint,         Theorem::lp_endpoint_interpolation,
    Theorem::lp_schur,               Theorem::lp_riesz_duality,         Theorem::lp_multilinear,
    Theorem::lp_holder,
};

std::string_view to_string(Theorem theorem);
std::optional<Theorem> theorem_from_string(std::string_view name);

/// Whether u and v are rescaled to unit L^2 norm before the check.
bool normalizes_windows(Theorem theorem);
/// Whether the theorem takes a symbol exponent r in addition to p.
bool uses_symbol_exponent(Theorem theorem);
/// Whether the theorem takes an operator/Schatten exponent p.
bool uses_operator_exponent(Theorem theorem);

struct Exponents {
  double p = 2.0;
  double r = 1.0;
};

/// Admissible p for the theorem (given r where relevant), as [lo, hi].
std::pair<double, double> operator_exponent_range(Theorem theorem, double r);
std::pair<double, double> symbol_exponent_range(Theorem theorem);

/// theta with 1/r = theta + (1 - theta)/2.
double interpolation_theta(double r);
/// t with t/r + (1 - t)/r' = 1/p (t = 1 when r = 2, where both ends coincide).
double multilinear_t(double r, double p);
/// t = (r - p) / (p (r - 2)).
double holder_t(double r, double p);

struct BoundReport {
  Theorem theorem{};
  double computed_lhs = 0.0;
  /// True when the left side is an exact norm, false for a sampled lower bound.
  bool lhs_exact = true;
  /// Right-hand side as stated.
  double stated_rhs = 0.0;
  /// Further right-hand sides that must also dominate (e.g. the constant the
  /// interpolation argument actually produces), keyed by name.
  std::map<std::string, double> extra_rhs;
  std::map<std::string, double> constants;
  double slack = 0.0;
  bool pass = false;
};

/// lhs <= rhs (1 + 1e-9) + 1e-12.
bool bound_holds(double lhs, double rhs);

struct BoundOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
};

/// Computes both sides of `theorem` for the multiplier described by `spec`.
/// Throws range when the exponents fall outside the theorem's hypotheses.
BoundReport bound_report(Theorem theorem, const Context& ctx, const MultiplierSpec& spec, Exponents exponents = {},
                         BoundOptions options = {});

}  // namespace qstft
