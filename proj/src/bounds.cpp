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

#include "qstft/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qstft/error.hpp"
#include "qstft/spectral.hpp"

namespace qstft {

namespace {

struct TheoremInfo {
  Theorem theorem;
  std::string_view name;
  bool unit_windows;
  bool operator_exponent;
  bool symbol_exponent;
};

constexpr TheoremInfo kInfo[] = {
    {Theorem::schatten_inf_l1_symbol, "schatten_inf_l1_symbol", true, false, false},
    {Theorem::schatten_inf_linf_symbol, "schatten_inf_linf_symbol", true, false, false},
    {Theorem::schatten_inf_lp_symbol, "schatten_inf_lp_symbol", true, true, false},
    {Theorem::schatten_2_l1_symbol, "schatten_2_l1_symbol", true, false, false},
    {Theorem::schatten_1_l1_symbol, "schatten_1_l1_symbol", true, false, false},
    {Theorem::schatten_p_lp_symbol, "schatten_p_lp_symbol", true, true, false},
    {Theorem::lp_l1_endpoint, "lp_l1_endpoint", false, false, false},
    {Theorem::lp_linf_endpoint, "lp_linf_endpoint", false, false, false},
    {Theorem::lp_endpoint_interpolation, "lp_endpoint_interpolation", false, true, false},
    {Theorem::lp_schur, "lp_schur", false, true, false},
    {Theorem::lp_riesz_duality, "lp_riesz_duality", false, true, false},
    {Theorem::lp_multilinear, "lp_multilinear", true, true, true},
    {Theorem::lp_holder, "lp_holder", false, true, true},
};

const TheoremInfo& info(Theorem theorem) {
  for (const auto& entry : kInfo) {
    if (entry.theorem == theorem) return entry;
  }
  throw Error(Errc::range, "unknown theorem");
}

// x^e with the conventions 0^0 = 1 and inf exponents handled by the caller.
double power(double base, double exponent) {
  if (exponent == 0.0) return 1.0;
  return std::pow(base, exponent);
}

// 1/p with 1/inf = 0.
double reciprocal(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

GroupFunction unit_l2(const GroupFunction& f) {
  const double norm = f.norm(2.0);
  return norm == 0.0 ? f : f.scaled(1.0 / norm);
}

void require_in(double value, std::pair<double, double> range, const char* what) {
  if (!(value >= range.first && value <= range.second)) {
    throw Error(Errc::range, std::string(what) + " = " + std::to_string(value) + " outside [" +
                                 std::to_string(range.first) + ", " + std::to_string(range.second) + "]");
  }
}

}  // namespace

std::string_view to_string(Theorem theorem) { return info(theorem).name; }

std::optional<Theorem> theorem_from_string(std::string_view name) {
  for (const auto& entry : kInfo) {
    if (entry.name == name) return entry.theorem;
  }
  return std::nullopt;
}

bool normalizes_windows(Theorem theorem) { return info(theorem).unit_windows; }
bool uses_symbol_exponent(Theorem theorem) { return info(theorem).symbol_exponent; }
bool uses_operator_exponent(Theorem theorem) { return info(theorem).operator_exponent; }

std::pair<double, double> symbol_exponent_range(Theorem theorem) {
  switch (theorem) {
    case Theorem::lp_multilinear: return {1.0, 2.0};
    // r = 2 is excluded; callers sample below it.
    case Theorem::lp_holder: return {1.0, std::nextafter(2.0, 1.0)};
    default: return {1.0, 1.0};
  }
}

std::pair<double, double> operator_exponent_range(Theorem theorem, double r) {
  if (uses_symbol_exponent(theorem)) return {r, conjugate_exponent(r)};
  if (uses_operator_exponent(theorem)) return {1.0, kInf};
  return {1.0, 1.0};
}

double interpolation_theta(double r) {
  require_in(r, {1.0, 2.0}, "r");
  return 2.0 / r - 1.0;
}

double multilinear_t(double r, double p) {
  require_in(r, {1.0, 2.0}, "r");
  const double rc = conjugate_exponent(r);
  require_in(p, {r, rc}, "p");
  if (r == 2.0) return 1.0;
  return (reciprocal(p) - reciprocal(rc)) / (1.0 / r - reciprocal(rc));
}

double holder_t(double r, double p) {
  if (!(r >= 1.0 && r < 2.0)) throw Error(Errc::range, "r must lie in [1, 2)");
  require_in(p, {r, conjugate_exponent(r)}, "p");
  if (std::isinf(p)) return 1.0 / (2.0 - r);  // limit of (r - p)/(p (r - 2))
  return (r - p) / (p * (r - 2.0));
}

bool bound_holds(double lhs, double rhs) { return lhs <= rhs * (1.0 + 1e-9) + 1e-12; }

BoundReport bound_report(Theorem theorem, const Context& ctx, const MultiplierSpec& spec, Exponents exponents,
                         BoundOptions options) {
  spec.validate(ctx);
  const auto& meta = info(theorem);
  const double p = exponents.p;
  const double r = exponents.r;
  if (meta.symbol_exponent) {
    require_in(r, symbol_exponent_range(theorem), "r");
    require_in(p, operator_exponent_range(theorem, r), "p");
  } else if (meta.operator_exponent) {
    require_in(p, {1.0, kInf}, "p");
  }

  MultiplierSpec working = spec;
  if (meta.unit_windows) {
    working.u = unit_l2(spec.u);
    working.v = unit_l2(spec.v);
  }
  const auto& u = working.u;
  const auto& v = working.v;
  const auto& g = working.g;
  const auto& sigma = working.sigma;

  BoundReport report;
  report.theorem = theorem;
  auto& k = report.constants;
  if (meta.operator_exponent) {
    k["p"] = p;
    k["p_conjugate"] = conjugate_exponent(p);
  }
  if (meta.symbol_exponent) {
    k["r"] = r;
    k["r_conjugate"] = conjugate_exponent(r);
  }

  const double g_inf = g.norm(kInf);
  const double g_2 = g.norm(2.0);
  const double u_1 = u.norm(1.0), u_inf = u.norm(kInf);
  const double v_1 = v.norm(1.0), v_inf = v.norm(kInf);
  const double sigma_1 = sigma.norm(1.0);
  k["g_inf"] = g_inf;
  k["g_2"] = g_2;
  k["u_1"] = u_1;
  k["u_inf"] = u_inf;
  k["v_1"] = v_1;
  k["v_inf"] = v_inf;
  k["sigma_1"] = sigma_1;

  const auto matrix = two_wavelet_matrix(ctx, working);
  auto operator_norm = [&](double exponent) {
    if (exponent == 1.0 || exponent == 2.0 || std::isinf(exponent)) return lp_operator_norm(matrix, exponent);
    report.lhs_exact = false;
    return lp_norm_lower_bound(matrix, exponent, options.trials, options.seed);
  };
  // ||g||_inf^(2/p) ||g||_2^(2(p-1)/p) (||u||_inf ||v||_inf)^((p-1)/p) ||sigma||_p
  auto schatten_interpolated = [&](double exponent) {
    const double inv = reciprocal(exponent);
    return power(g_inf, 2.0 * inv) * power(g_2, 2.0 * (1.0 - inv)) * power(u_inf * v_inf, 1.0 - inv) *
           sigma.norm(exponent);
  };

  switch (theorem) {
    case Theorem::schatten_inf_l1_symbol:
      report.computed_lhs = schatten_norm(matrix, kInf);
      report.stated_rhs = sigma_1 * g_inf * g_inf;
      break;
    case Theorem::schatten_inf_linf_symbol:
      k["sigma_inf"] = sigma.norm(kInf);
      report.computed_lhs = schatten_norm(matrix, kInf);
      report.stated_rhs = u_inf * v_inf * g_2 * g_2 * sigma.norm(kInf);
      break;
    case Theorem::schatten_inf_lp_symbol:
      k["sigma_p"] = sigma.norm(p);
      report.computed_lhs = schatten_norm(matrix, kInf);
      report.stated_rhs = schatten_interpolated(p);
      break;
    case Theorem::schatten_2_l1_symbol:
      report.computed_lhs = schatten_norm(matrix, 2.0);
      report.stated_rhs = g_inf * sigma_1;
      report.extra_rhs["squared_window_sup"] = g_inf * g_inf * sigma_1;
      break;
    case Theorem::schatten_1_l1_symbol:
      report.computed_lhs = schatten_norm(matrix, 1.0);
      report.stated_rhs = sigma_1 * g_2 * g_2;
      break;
    case Theorem::schatten_p_lp_symbol:
      k["sigma_p"] = sigma.norm(p);
      report.computed_lhs = schatten_norm(matrix, p);
      report.stated_rhs = schatten_interpolated(p);
      break;
    case Theorem::lp_l1_endpoint:
      report.computed_lhs = lp_operator_norm(matrix, 1.0);
      report.stated_rhs = u_inf * v_1 * g_inf * g_inf * sigma_1;
      break;
    case Theorem::lp_linf_endpoint:
      report.computed_lhs = lp_operator_norm(matrix, kInf);
      report.stated_rhs = u_1 * v_inf * g_2 * g_2 * sigma_1;
      break;
    case Theorem::lp_endpoint_interpolation: {
      const double inv = reciprocal(p);
      const double inv_c = 1.0 - inv;
      const double c1 = u_inf * v_1 * g_inf * g_inf * sigma_1;
      const double c2 = u_1 * v_inf * g_2 * g_2 * sigma_1;
      k["c1"] = c1;
      k["c2"] = c2;
      report.computed_lhs = operator_norm(p);
      report.stated_rhs =
          power(u_1, inv_c) * power(v_1, inv) * power(u_inf, inv) * power(v_inf, inv_c) * g_inf * sigma_1;
      report.extra_rhs["interpolated"] = power(c1, inv) * power(c2, inv_c);
      break;
    }
    case Theorem::lp_schur:
      report.computed_lhs = operator_norm(p);
      report.stated_rhs = std::max(u_1 * v_inf, u_inf * v_1) * g_inf * g_inf * sigma_1;
      break;
    case Theorem::lp_riesz_duality: {
      const double pc = conjugate_exponent(p);
      k["u_p_conjugate"] = u.norm(pc);
      k["v_p"] = v.norm(p);
      report.computed_lhs = operator_norm(p);
      report.stated_rhs = u.norm(pc) * v.norm(p) * g_inf * g_inf * sigma_1;
      break;
    }
    case Theorem::lp_multilinear: {
      const double theta = interpolation_theta(r);
      const double t = multilinear_t(r, p);
      const double shared = power(g_2 * g_2 * g_inf * u_inf * v_inf, (1.0 - theta) / 2.0);
      const double c1 = power(g_inf * g_inf * u_inf * v_1, theta) * shared;
      const double c2 = power(g_inf * g_inf * u_1 * v_inf, theta) * shared;
      k["theta"] = theta;
      k["t"] = t;
      k["c1"] = c1;
      k["c2"] = c2;
      k["sigma_r"] = sigma.norm(r);
      report.computed_lhs = operator_norm(p);
      report.stated_rhs = power(c1, t) * power(c2, 1.0 - t) * sigma.norm(r);
      break;
    }
    case Theorem::lp_holder: {
      const double t = holder_t(r, p);
      const double rc = conjugate_exponent(r);
      k["t"] = t;
      k["g_r_conjugate"] = g.norm(rc);
      k["u_r"] = u.norm(r);
      k["v_r"] = v.norm(r);
      k["sigma_r"] = sigma.norm(r);
      report.computed_lhs = operator_norm(p);
      report.stated_rhs = g_inf * g.norm(rc) * power(u.norm(r) * v_inf, t) * power(v.norm(r) * u_inf, 1.0 - t) *
                          sigma.norm(r);
      break;
    }
  }

  double tightest = report.stated_rhs;
  report.pass = bound_holds(report.computed_lhs, report.stated_rhs);
  for (const auto& [name, rhs] : report.extra_rhs) {
    report.pass = report.pass && bound_holds(report.computed_lhs, rhs);
    tightest = std::min(tightest, rhs);
  }
  report.slack = tightest - report.computed_lhs;
  return report;
}

}  // namespace qstft
