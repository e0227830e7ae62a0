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

#include "qstft/function.hpp"
#include "qstft/harmonic.hpp"

namespace qstft {

/// g_{omega,zH}(x) = g(xH - zH) <x, chi_omega>, a function on G.
GroupFunction atom(const Context& ctx, const GroupFunction& window, std::size_t omega, std::size_t coset);

/// Quotient-window transform
///   D f(omega, zH) = sum_x f(x) conj(<x, chi_omega>) conj(g(xH - zH)) w_G
/// evaluated by direct summation.
TimeFreqFunction analyze(const Context& ctx, const GroupFunction& f, const GroupFunction& window);

/// Same transform computed as an inner product on G/H:
///   D f(omega, zH) = <R_H(M_{-omega} f), T_{zH} g>_{G/H} = (R_H(M_{-omega} f) * g~)(zH)
/// with g~(xH) = conj(g(-xH)).
TimeFreqFunction analyze_quotient_form(const Context& ctx, const GroupFunction& f, const GroupFunction& window);

/// Same transform computed on the Fourier side over H^perp:
///   D f(omega, zH) = <T_{-omega} f^, M_{-zH} g^>_{H^perp}.
TimeFreqFunction analyze_fourier_form(const Context& ctx, const GroupFunction& f, const GroupFunction& window);

/// (a * b)(xH) = sum_{yH} a(yH) b(xH - yH) w_{G/H}.
GroupFunction quotient_convolve(const Quotient& quotient, const GroupFunction& a, const GroupFunction& b);
/// g~(xH) = conj(g(-xH)).
GroupFunction involution(const Quotient& quotient, const GroupFunction& g);

/// Adjoint of `analyze` for a fixed window:
///   (S F)(x) = sum_{omega, zH} F(omega, zH) <x, chi_omega> g(xH - zH) w_G^ w_{G/H}.
GroupFunction synthesize(const Context& ctx, const TimeFreqFunction& coefficients, const GroupFunction& window);

/// ||g||^-2 S(F, g): the left inverse of `analyze`. On grid functions outside
/// the range of the transform this is the least-squares (pseudo-) inverse.
GroupFunction left_inverse(const Context& ctx, const TimeFreqFunction& coefficients, const GroupFunction& window);

/// <g2, g1>^-1 S(D_{g1} f, g2). Throws non_invertible_window_pair when
/// |<g2, g1>| <= 1e-12.
GroupFunction reconstruct(const Context& ctx, const GroupFunction& f, const GroupFunction& analysis_window,
                          const GroupFunction& synthesis_window);

/// Throws degenerate_window when g vanishes identically.
void require_nonzero_window(const GroupFunction& window);

}  // namespace qstft
