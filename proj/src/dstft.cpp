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

#include "qstft/dstft.hpp"

#include <cmath>

#include "qstft/error.hpp"

namespace qstft {

namespace {
constexpr double kPairingFloor = 1e-12;
}

void require_nonzero_window(const GroupFunction& window) {
  if (window.norm(kInf) == 0.0) throw Error(Errc::degenerate_window, "window vanishes identically");
}

GroupFunction atom(const Context& ctx, const GroupFunction& window, std::size_t omega, std::size_t coset) {
  ctx.require(window, ctx.quotient_space(), "window");
  const auto& group = ctx.group();
  const auto& q = ctx.quotient();
  if (omega >= group.order() || coset >= q.size()) throw Error(Errc::invalid_element, "atom index out of range");
  auto out = GroupFunction::zeros(ctx.group_space());
  for (std::size_t x = 0; x < group.order(); ++x) {
    out[x] = window[q.subtract(q.coset_of(x), coset)] * group.pairing(omega, x);
  }
  return out;
}

TimeFreqFunction analyze(const Context& ctx, const GroupFunction& f, const GroupFunction& window) {
  ctx.require(f, ctx.group_space(), "analyzed function");
  ctx.require(window, ctx.quotient_space(), "window");
  const auto& group = ctx.group();
  const auto& q = ctx.quotient();
  auto out = ctx.zero_grid();
  for (std::size_t omega = 0; omega < out.rows(); ++omega) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      Complex acc{};
      for (std::size_t x = 0; x < group.order(); ++x) {
        acc += f[x] * std::conj(group.pairing(omega, x)) * std::conj(window[q.subtract(q.coset_of(x), c)]);
      }
      out(omega, c) = acc * group.weight();
    }
  }
  return out;
}

TimeFreqFunction analyze_quotient_form(const Context& ctx, const GroupFunction& f, const GroupFunction& window) {
  ctx.require(f, ctx.group_space(), "analyzed function");
  ctx.require(window, ctx.quotient_space(), "window");
  const auto& group = ctx.group();
  const auto& q = ctx.quotient();
  const auto reflected = involution(q, window);
  auto out = ctx.zero_grid();
  for (std::size_t omega = 0; omega < out.rows(); ++omega) {
    // M_{-omega} f = conj(<x, chi_omega>) f(x)
    const auto demodulated = modulate(group, f, group.negate(omega));
    const auto correlation = quotient_convolve(q, periodize(q, demodulated), reflected);
    for (std::size_t c = 0; c < out.cols(); ++c) out(omega, c) = correlation[c];
  }
  return out;
}

TimeFreqFunction analyze_fourier_form(const Context& ctx, const GroupFunction& f, const GroupFunction& window) {
  ctx.require(f, ctx.group_space(), "analyzed function");
  ctx.require(window, ctx.quotient_space(), "window");
  const auto& group = ctx.group();
  const auto& q = ctx.quotient();
  const auto& perp = ctx.annihilator();
  const auto f_hat = fourier(group, f);
  const auto g_hat = fourier(ctx, window);
  auto out = ctx.zero_grid();
  for (std::size_t omega = 0; omega < out.rows(); ++omega) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      Complex acc{};
      for (std::size_t i = 0; i < perp.size(); ++i) {
        const auto eta = perp.elements()[i];
        // (T_{-omega} f^)(eta) = f^(eta + omega); (M_{-zH} g^)(eta) = conj(<z, eta>) g^(eta)
        const Complex shifted = f_hat[group.add(eta, omega)];
        const Complex modulated = std::conj(group.pairing(eta, q.representative(c))) * g_hat[i];
        acc += shifted * std::conj(modulated);
      }
      out(omega, c) = acc * perp.weight();
    }
  }
  return out;
}

GroupFunction quotient_convolve(const Quotient& quotient, const GroupFunction& a, const GroupFunction& b) {
  const auto space = quotient_space(quotient);
  if (!(a.space() == space) || !(b.space() == space)) throw Error(Errc::mismatch, "convolution operands must live on G/H");
  auto out = GroupFunction::zeros(space);
  for (std::size_t x = 0; x < quotient.size(); ++x) {
    Complex acc{};
    for (std::size_t y = 0; y < quotient.size(); ++y) acc += a[y] * b[quotient.subtract(x, y)];
    out[x] = acc * quotient.weight();
  }
  return out;
}

GroupFunction involution(const Quotient& quotient, const GroupFunction& g) {
  if (!(g.space() == quotient_space(quotient))) throw Error(Errc::mismatch, "involution: not a function on G/H");
  auto out = g;
  for (std::size_t c = 0; c < g.size(); ++c) out[c] = std::conj(g[quotient.negate(c)]);
  return out;
}

GroupFunction synthesize(const Context& ctx, const TimeFreqFunction& coefficients, const GroupFunction& window) {
  ctx.require_grid(coefficients, "coefficients");
  ctx.require(window, ctx.quotient_space(), "window");
  const auto& group = ctx.group();
  const auto& q = ctx.quotient();
  const double cell = to_double(ctx.grid_weight());
  auto out = GroupFunction::zeros(ctx.group_space());
  for (std::size_t x = 0; x < group.order(); ++x) {
    const auto cx = q.coset_of(x);
    Complex acc{};
    for (std::size_t omega = 0; omega < coefficients.rows(); ++omega) {
      const Complex character = group.pairing(omega, x);
      for (std::size_t c = 0; c < coefficients.cols(); ++c) {
        acc += coefficients(omega, c) * character * window[q.subtract(cx, c)];
      }
    }
    out[x] = acc * cell;
  }
  return out;
}

GroupFunction left_inverse(const Context& ctx, const TimeFreqFunction& coefficients, const GroupFunction& window) {
  require_nonzero_window(window);
  const double energy = std::pow(window.norm(2.0), 2);
  return synthesize(ctx, coefficients, window).scaled(1.0 / energy);
}

GroupFunction reconstruct(const Context& ctx, const GroupFunction& f, const GroupFunction& analysis_window,
                          const GroupFunction& synthesis_window) {
  ctx.require(analysis_window, ctx.quotient_space(), "analysis window");
  ctx.require(synthesis_window, ctx.quotient_space(), "synthesis window");
  const Complex pairing = synthesis_window.inner(analysis_window);
  if (std::abs(pairing) <= kPairingFloor) {
    throw Error(Errc::non_invertible_window_pair, "<g2, g1> vanishes, the pair cannot reconstruct");
  }
  return synthesize(ctx, analyze(ctx, f, analysis_window), synthesis_window).scaled(1.0 / pairing);
}

}  // namespace qstft
