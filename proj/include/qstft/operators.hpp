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

#include <functional>

#include <Eigen/Dense>

#include "qstft/dstft.hpp"
#include "qstft/function.hpp"
#include "qstft/harmonic.hpp"

namespace qstft {

/// Linear map between two measured spaces, stored as the matrix that acts on
/// coefficient vectors: (A f)_i = sum_j A(i, j) f_j.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(Space row_space, Space col_space, Eigen::MatrixXcd entries);

  static OperatorMatrix identity(Space space);
  static OperatorMatrix zero(Space row_space, Space col_space);

  const Space& row_space() const noexcept { return row_space_; }
  const Space& col_space() const noexcept { return col_space_; }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  Eigen::Index rows() const noexcept { return entries_.rows(); }
  Eigen::Index cols() const noexcept { return entries_.cols(); }
  bool is_square() const noexcept { return row_space_ == col_space_; }

  GroupFunction apply(const GroupFunction& f) const;
  /// Measure-correct adjoint: A*(i, j) = conj(A(j, i)) w_row / w_col.
  OperatorMatrix adjoint() const;
  /// <A f, h> in the row space's inner product.
  Complex form(const GroupFunction& f, const GroupFunction& h) const;

  OperatorMatrix compose(const OperatorMatrix& inner) const;
  OperatorMatrix plus(const OperatorMatrix& other) const;
  OperatorMatrix minus(const OperatorMatrix& other) const;
  OperatorMatrix scaled(Complex factor) const;

 private:
  Space row_space_;
  Space col_space_;
  Eigen::MatrixXcd entries_;
};

/// Column j is map(delta_j).
OperatorMatrix assemble(const Space& domain, const Space& codomain,
                        const std::function<GroupFunction(const GroupFunction&)>& map);

/// Symbol sigma on the grid, pre-window u and post-window v on G, window g on G/H.
struct MultiplierSpec {
  TimeFreqFunction sigma;
  GroupFunction u;
  GroupFunction v;
  GroupFunction g;

  void validate(const Context& ctx) const;
};

/// P f(t) = conj(v(t)) sum_{omega, zH} sigma D(u f) g_{omega,zH}(t) w_G^ w_{G/H}.
GroupFunction apply_two_wavelet(const Context& ctx, const MultiplierSpec& spec, const GroupFunction& f);
/// <P f, h> = sum sigma D(u f) conj(D(v h)) w_G^ w_{G/H}, straight from the grid.
Complex two_wavelet_form(const Context& ctx, const MultiplierSpec& spec, const GroupFunction& f,
                         const GroupFunction& h);
OperatorMatrix two_wavelet_matrix(const Context& ctx, const MultiplierSpec& spec);

/// N(t; s) = sum sigma u(s) conj(g_{omega,zH}(s)) g_{omega,zH}(t) conj(v(t)) w_G^ w_{G/H},
/// rows indexed by t, columns by s.
Eigen::MatrixXcd schur_kernel(const Context& ctx, const MultiplierSpec& spec);
/// The integral operator f -> sum_s N(t; s) f(s) w_G.
OperatorMatrix kernel_matrix(const Context& ctx, const MultiplierSpec& spec);

/// M f = ||g||^-2 S(sigma . D f, g).
GroupFunction apply_generalized_multiplier(const Context& ctx, const TimeFreqFunction& sigma,
                                           const GroupFunction& window, const GroupFunction& f);
OperatorMatrix generalized_multiplier_matrix(const Context& ctx, const TimeFreqFunction& sigma,
                                             const GroupFunction& window);

/// Analysis as a map G -> grid.
OperatorMatrix analysis_matrix(const Context& ctx, const GroupFunction& window);
/// Left inverse ||g||^-2 S(., g) as a map grid -> G.
OperatorMatrix left_inverse_matrix(const Context& ctx, const GroupFunction& window);

}  // namespace qstft
