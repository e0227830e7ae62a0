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

#include "qstft/operators.hpp"

#include <cmath>

#include "qstft/error.hpp"

namespace qstft {

OperatorMatrix::OperatorMatrix(Space row_space, Space col_space, Eigen::MatrixXcd entries)
    : row_space_(row_space), col_space_(col_space), entries_(std::move(entries)) {
  if (entries_.rows() != static_cast<Eigen::Index>(row_space_.size) ||
      entries_.cols() != static_cast<Eigen::Index>(col_space_.size)) {
    throw Error(Errc::mismatch, "matrix shape does not match its spaces");
  }
}

OperatorMatrix OperatorMatrix::identity(Space space) {
  const auto n = static_cast<Eigen::Index>(space.size);
  return {space, space, Eigen::MatrixXcd::Identity(n, n)};
}

OperatorMatrix OperatorMatrix::zero(Space row_space, Space col_space) {
  return {row_space, col_space,
          Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(row_space.size), static_cast<Eigen::Index>(col_space.size))};
}

GroupFunction OperatorMatrix::apply(const GroupFunction& f) const {
  if (!(f.space() == col_space_)) throw Error(Errc::mismatch, "operator applied to a function on the wrong space");
  const Eigen::Map<const Eigen::VectorXcd> in(f.values().data(), static_cast<Eigen::Index>(f.size()));
  const Eigen::VectorXcd out = entries_ * in;
  return GroupFunction(row_space_, std::vector<Complex>(out.data(), out.data() + out.size()));
}

OperatorMatrix OperatorMatrix::adjoint() const {
  const double ratio = row_space_.point_weight() / col_space_.point_weight();
  return {col_space_, row_space_, entries_.adjoint() * ratio};
}

Complex OperatorMatrix::form(const GroupFunction& f, const GroupFunction& h) const { return apply(f).inner(h); }

OperatorMatrix OperatorMatrix::compose(const OperatorMatrix& inner) const {
  if (!(inner.row_space_ == col_space_)) throw Error(Errc::mismatch, "composition of incompatible operators");
  return {row_space_, inner.col_space_, entries_ * inner.entries_};
}

OperatorMatrix OperatorMatrix::plus(const OperatorMatrix& other) const {
  if (!(row_space_ == other.row_space_) || !(col_space_ == other.col_space_)) {
    throw Error(Errc::mismatch, "sum of operators on different spaces");
  }
  return {row_space_, col_space_, entries_ + other.entries_};
}

OperatorMatrix OperatorMatrix::minus(const OperatorMatrix& other) const { return plus(other.scaled(-1.0)); }

OperatorMatrix OperatorMatrix::scaled(Complex factor) const { return {row_space_, col_space_, entries_ * factor}; }

OperatorMatrix assemble(const Space& domain, const Space& codomain,
                        const std::function<GroupFunction(const GroupFunction&)>& map) {
  Eigen::MatrixXcd entries(static_cast<Eigen::Index>(codomain.size), static_cast<Eigen::Index>(domain.size));
  for (std::size_t j = 0; j < domain.size; ++j) {
    const auto column = map(GroupFunction::delta(domain, j));
    if (!(column.space() == codomain)) throw Error(Errc::mismatch, "assembled map left its codomain");
    for (std::size_t i = 0; i < codomain.size; ++i) {
      entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = column[i];
    }
  }
  return {codomain, domain, std::move(entries)};
}

void MultiplierSpec::validate(const Context& ctx) const {
  ctx.require_grid(sigma, "symbol");
  ctx.require(u, ctx.group_space(), "u");
  ctx.require(v, ctx.group_space(), "v");
  ctx.require(g, ctx.quotient_space(), "window");
}

GroupFunction apply_two_wavelet(const Context& ctx, const MultiplierSpec& spec, const GroupFunction& f) {
  spec.validate(ctx);
  ctx.require(f, ctx.group_space(), "input");
  const auto coefficients = analyze(ctx, spec.u.times(f), spec.g).times(spec.sigma);
  return synthesize(ctx, coefficients, spec.g).times(spec.v.conj());
}

Complex two_wavelet_form(const Context& ctx, const MultiplierSpec& spec, const GroupFunction& f,
                         const GroupFunction& h) {
  spec.validate(ctx);
  const auto left = analyze(ctx, spec.u.times(f), spec.g).times(spec.sigma);
  const auto right = analyze(ctx, spec.v.times(h), spec.g);
  return left.inner(right);
}

OperatorMatrix two_wavelet_matrix(const Context& ctx, const MultiplierSpec& spec) {
  spec.validate(ctx);
  const auto space = ctx.group_space();
  return assemble(space, space, [&](const GroupFunction& f) { return apply_two_wavelet(ctx, spec, f); });
}

Eigen::MatrixXcd schur_kernel(const Context& ctx, const MultiplierSpec& spec) {
  spec.validate(ctx);
  const auto n = static_cast<Eigen::Index>(ctx.group().order());
  const double cell = to_double(ctx.grid_weight());
  Eigen::MatrixXcd kernel = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXcd left(n);
  Eigen::VectorXcd right(n);
  for (std::size_t omega = 0; omega < spec.sigma.rows(); ++omega) {
    for (std::size_t c = 0; c < spec.sigma.cols(); ++c) {
      const Complex s = spec.sigma(omega, c);
      if (s == Complex{}) continue;
      const auto a = atom(ctx, spec.g, omega, c);
      for (Eigen::Index t = 0; t < n; ++t) {
        const auto i = static_cast<std::size_t>(t);
        left(t) = a[i] * std::conj(spec.v[i]);
        right(t) = spec.u[i] * std::conj(a[i]);
      }
      kernel += (s * cell) * left * right.transpose();
    }
  }
  return kernel;
}

OperatorMatrix kernel_matrix(const Context& ctx, const MultiplierSpec& spec) {
  const auto space = ctx.group_space();
  return {space, space, schur_kernel(ctx, spec) * space.point_weight()};
}

GroupFunction apply_generalized_multiplier(const Context& ctx, const TimeFreqFunction& sigma,
                                           const GroupFunction& window, const GroupFunction& f) {
  ctx.require_grid(sigma, "symbol");
  require_nonzero_window(window);
  return left_inverse(ctx, analyze(ctx, f, window).times(sigma), window);
}

OperatorMatrix generalized_multiplier_matrix(const Context& ctx, const TimeFreqFunction& sigma,
                                             const GroupFunction& window) {
  ctx.require_grid(sigma, "symbol");
  require_nonzero_window(window);
  const auto space = ctx.group_space();
  return assemble(space, space,
                  [&](const GroupFunction& f) { return apply_generalized_multiplier(ctx, sigma, window, f); });
}

OperatorMatrix analysis_matrix(const Context& ctx, const GroupFunction& window) {
  return assemble(ctx.group_space(), ctx.grid_space(),
                  [&](const GroupFunction& f) { return analyze(ctx, f, window).flat(); });
}

OperatorMatrix left_inverse_matrix(const Context& ctx, const GroupFunction& window) {
  require_nonzero_window(window);
  const auto rows = ctx.dual().order();
  const auto cols = ctx.quotient().size();
  return assemble(ctx.grid_space(), ctx.group_space(), [&](const GroupFunction& flat) {
    return left_inverse(ctx, TimeFreqFunction(rows, cols, flat), window);
  });
}

}  // namespace qstft
