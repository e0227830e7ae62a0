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

#include "qstft/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qstft/error.hpp"
#include "qstft/rng.hpp"

namespace qstft {

namespace {

constexpr int kRefineSteps = 4;

void require_exponent(double p) {
  if (!(p >= 1.0)) throw Error(Errc::invalid_exponent, "exponent must lie in [1, inf]");
}

double vector_norm(const Eigen::VectorXcd& x, double weight, double p) {
  return lp_norm(std::span<const Complex>(x.data(), static_cast<std::size_t>(x.size())), weight, p);
}

// |y_i|^(q-1) sgn(y_i), the unnormalized dual direction of y in l^q.
Eigen::VectorXcd dual_direction(const Eigen::VectorXcd& y, double q) {
  Eigen::VectorXcd out(y.size());
  const double peak = y.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const double m = std::abs(y(i));
    out(i) = m == 0.0 ? Complex{} : (y(i) / m) * std::pow(m / peak, q - 1.0);
  }
  return out;
}

}  // namespace

double conjugate_exponent(double p) {
  require_exponent(p);
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

Eigen::VectorXd singular_values(const OperatorMatrix& a) {
  const double fold = std::sqrt(a.row_space().point_weight() / a.col_space().point_weight());
  if (a.rows() == 0 || a.cols() == 0) return {};
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a.entries() * fold);
  return svd.singularValues();
}

double schatten_norm(const OperatorMatrix& a, double p) {
  require_exponent(p);
  const auto s = singular_values(a);
  if (s.size() == 0) return 0.0;
  if (std::isinf(p)) return s.maxCoeff();
  if (p == 1.0) return s.sum();
  const double peak = s.maxCoeff();
  if (peak == 0.0) return 0.0;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) sum += std::pow(s(i) / peak, p);
  return peak * std::pow(sum, 1.0 / p);
}

double lp_operator_norm(const OperatorMatrix& a, double p) {
  require_exponent(p);
  const double w_row = a.row_space().point_weight();
  const double w_col = a.col_space().point_weight();
  const Eigen::MatrixXd magnitude = a.entries().cwiseAbs();
  if (magnitude.size() == 0) return 0.0;
  if (p == 1.0) return magnitude.colwise().sum().maxCoeff() * w_row / w_col;
  if (std::isinf(p)) return magnitude.rowwise().sum().maxCoeff();
  if (p == 2.0) return schatten_norm(a, kInf);
  throw Error(Errc::unsupported_exponent, "exact L^p operator norms are only available for p in {1, 2, inf}");
}

double lp_norm_lower_bound(const OperatorMatrix& a, double p, std::size_t trials, std::uint64_t seed) {
  require_exponent(p);
  if (trials == 0) throw Error(Errc::range, "at least one trial is required");
  const double w_row = a.row_space().point_weight();
  const double w_col = a.col_space().point_weight();
  const auto& m = a.entries();
  const Eigen::Index n = m.cols();
  if (n == 0 || m.rows() == 0) return 0.0;

  double best = 0.0;
  auto ratio = [&](const Eigen::VectorXcd& x) {
    const double denominator = vector_norm(x, w_col, p);
    if (denominator == 0.0) return 0.0;
    return vector_norm(m * x, w_row, p) / denominator;
  };

  for (Eigen::Index j = 0; j < n; ++j) best = std::max(best, ratio(Eigen::VectorXcd::Unit(n, j)));

  const bool refine = p > 1.0 && !std::isinf(p);
  const double q = refine ? conjugate_exponent(p) : 1.0;
  const SplitMix64 root(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    auto stream = root.split(k);
    Eigen::VectorXcd x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = stream.unit_disc();
    best = std::max(best, ratio(x));
    if (!refine) continue;
    for (int step = 0; step < kRefineSteps; ++step) {
      const Eigen::VectorXcd z = m.adjoint() * dual_direction(m * x, p);
      if (z.norm() == 0.0) break;
      x = dual_direction(z, q);
      best = std::max(best, ratio(x));
    }
  }
  return best;
}

Complex trace(const OperatorMatrix& a) {
  if (!a.is_square()) throw Error(Errc::mismatch, "trace of a non-square operator");
  return a.entries().trace();
}

Eigen::VectorXcd eigenvalues(const OperatorMatrix& a) {
  if (!a.is_square()) throw Error(Errc::mismatch, "eigenvalues of a non-square operator");
  if (a.rows() == 0) return {};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a.entries(), false);
  return solver.eigenvalues();
}

namespace {

template <typename Pair>
Complex atom_sum(const Context& ctx, const MultiplierSpec& spec, Pair pair) {
  spec.validate(ctx);
  Complex total = 0.0;
  for (std::size_t omega = 0; omega < spec.sigma.rows(); ++omega) {
    for (std::size_t coset = 0; coset < spec.sigma.cols(); ++coset) {
      const Complex s = spec.sigma(omega, coset);
      if (s == Complex{}) continue;
      const GroupFunction a = atom(ctx, spec.g, omega, coset);
      total += s * pair(spec.u.times(a), spec.v.times(a));
    }
  }
  return total * to_double(ctx.grid_weight());
}

}  // namespace

Complex trace_formula(const Context& ctx, const MultiplierSpec& spec) {
  return atom_sum(ctx, spec, [](const GroupFunction& ua, const GroupFunction& va) { return ua.inner(va); });
}

Complex trace_formula_swapped(const Context& ctx, const MultiplierSpec& spec) {
  return atom_sum(ctx, spec, [](const GroupFunction& ua, const GroupFunction& va) { return va.inner(ua); });
}

}  // namespace qstft
