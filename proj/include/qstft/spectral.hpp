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

#include <Eigen/Dense>

#include "qstft/operators.hpp"

namespace qstft {

/// 1/p + 1/p' = 1, with 1 <-> inf.
double conjugate_exponent(double p);

/// Singular values of A as a map between the weighted L^2 spaces, descending.
/// The weights are folded in by the similarity sqrt(w_row / w_col) A.
Eigen::VectorXd singular_values(const OperatorMatrix& a);

/// (sum_j s_j^p)^(1/p); p = inf gives the largest singular value.
double schatten_norm(const OperatorMatrix& a, double p);

/// Exact operator norm on L^p for p in {1, 2, inf}; any other exponent throws
/// unsupported_exponent (use lp_norm_lower_bound instead).
double lp_operator_norm(const OperatorMatrix& a, double p);

/// max ||A f||_p / ||f||_p over the canonical basis vectors and `trials`
/// seeded random inputs, each followed by a few steps of the p-norm power
/// iteration. Candidate k depends only on (seed, k), so the bound is
/// nondecreasing in `trials`.
double lp_norm_lower_bound(const OperatorMatrix& a, double p, std::size_t trials, std::uint64_t seed);

Complex trace(const OperatorMatrix& a);
Eigen::VectorXcd eigenvalues(const OperatorMatrix& a);

/// sum_{omega, zH} sigma <u g_{omega,zH}, v g_{omega,zH}>_G w_G^ w_{G/H}: the
/// trace of the two-wavelet multiplier, computed from the atoms alone.
Complex trace_formula(const Context& ctx, const MultiplierSpec& spec);
/// The same sum with the inner product taken as <v g_{omega,zH}, u g_{omega,zH}>.
/// It is the complex conjugate of each term, so it matches the trace only
/// when u conj(v) is real.
Complex trace_formula_swapped(const Context& ctx, const MultiplierSpec& spec);

}  // namespace qstft
