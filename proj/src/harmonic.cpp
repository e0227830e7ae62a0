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

#include "qstft/harmonic.hpp"

#include <string>

#include "qstft/error.hpp"

namespace qstft {

namespace {

std::vector<std::size_t> strides_of(const std::vector<std::int64_t>& factors) {
  std::vector<std::size_t> strides(factors.size(), 1);
  std::size_t stride = 1;
  for (std::size_t j = factors.size(); j-- > 0;) {
    strides[j] = stride;
    stride *= static_cast<std::size_t>(factors[j]);
  }
  return strides;
}

// In-place unweighted transform; sign = -1 for analysis, +1 for synthesis.
void separable_transform(const FiniteGroup& group, std::vector<Complex>& data, int sign) {
  const auto& factors = group.factors();
  const auto strides = strides_of(factors);
  std::vector<Complex> line;
  std::vector<Complex> out;
  for (std::size_t axis = 0; axis < factors.size(); ++axis) {
    const auto n = static_cast<std::size_t>(factors[axis]);
    const auto stride = strides[axis];
    const std::int64_t scale = group.exponent() / factors[axis];
    line.resize(n);
    out.resize(n);
    for (std::size_t base = 0; base < data.size(); ++base) {
      if ((base / stride) % n != 0) continue;
      for (std::size_t x = 0; x < n; ++x) line[x] = data[base + x * stride];
      for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        for (std::size_t x = 0; x < n; ++x) {
          const auto m = static_cast<std::int64_t>((k * x) % n) * scale;
          acc += line[x] * group.root(sign * m);
        }
        out[k] = acc;
      }
      for (std::size_t k = 0; k < n; ++k) data[base + k * stride] = out[k];
    }
  }
}

}  // namespace

Context::Context(FiniteGroup group, const Subgroup& subgroup)
    : group_(std::move(group)),
      quotient_(build_quotient(group_, subgroup)),
      dual_(group_),
      perp_(qstft::annihilator(group_, subgroup)) {}

Context::Context(std::vector<std::int64_t> factors, const std::vector<GroupElement>& generators)
    : Context(FiniteGroup(factors, Weight{1}), generate_subgroup(FiniteGroup(factors, Weight{1}), generators)) {}

void Context::require(const GroupFunction& f, const Space& expected, const char* what) const {
  if (!(f.space() == expected)) {
    throw Error(Errc::mismatch, std::string(what) + " must live on the " + to_string(expected.kind) + " space of size " +
                                    std::to_string(expected.size) + ", got " + to_string(f.space().kind) +
                                    " of size " + std::to_string(f.size()));
  }
}

void Context::require_grid(const TimeFreqFunction& grid, const char* what) const {
  if (grid.rows() != dual_.order() || grid.cols() != quotient_.size() || !(grid.space() == grid_space())) {
    throw Error(Errc::mismatch, std::string(what) + " is not a function on this dual x quotient grid");
  }
}

GroupFunction fourier(const FiniteGroup& group, const GroupFunction& f, FourierPath path) {
  if (!(f.space() == group_space(group))) throw Error(Errc::mismatch, "fourier: input is not a function on G");
  const auto n = group.order();
  std::vector<Complex> out(n);
  if (path == FourierPath::separable) {
    out.assign(f.values().begin(), f.values().end());
    separable_transform(group, out, -1);
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      Complex acc{};
      for (std::size_t x = 0; x < n; ++x) acc += f[x] * std::conj(group.pairing(k, x));
      out[k] = acc;
    }
  }
  for (auto& v : out) v *= group.weight();
  return GroupFunction(dual_space(group), std::move(out));
}

GroupFunction inverse_fourier(const FiniteGroup& group, const GroupFunction& spectrum, FourierPath path) {
  const auto dual = dual_space(group);
  if (!(spectrum.space() == dual)) throw Error(Errc::mismatch, "inverse_fourier: input is not a function on G^");
  const auto n = group.order();
  std::vector<Complex> out(n);
  if (path == FourierPath::separable) {
    out.assign(spectrum.values().begin(), spectrum.values().end());
    separable_transform(group, out, +1);
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += spectrum[k] * group.pairing(k, x);
      out[x] = acc;
    }
  }
  for (auto& v : out) v *= dual.point_weight();
  return GroupFunction(group_space(group), std::move(out));
}

GroupFunction fourier(const Context& ctx, const GroupFunction& on_quotient) {
  ctx.require(on_quotient, ctx.quotient_space(), "quotient fourier input");
  const auto& q = ctx.quotient();
  const auto& perp = ctx.annihilator().elements();
  std::vector<Complex> out(perp.size());
  for (std::size_t i = 0; i < perp.size(); ++i) {
    Complex acc{};
    for (std::size_t c = 0; c < q.size(); ++c) {
      acc += on_quotient[c] * std::conj(ctx.group().pairing(perp[i], q.representative(c)));
    }
    out[i] = acc * q.weight();
  }
  return GroupFunction(ctx.annihilator_space(), std::move(out));
}

GroupFunction inverse_fourier(const Context& ctx, const GroupFunction& on_annihilator) {
  ctx.require(on_annihilator, ctx.annihilator_space(), "quotient inverse fourier input");
  const auto& q = ctx.quotient();
  const auto& perp = ctx.annihilator().elements();
  std::vector<Complex> out(q.size());
  for (std::size_t c = 0; c < q.size(); ++c) {
    Complex acc{};
    for (std::size_t i = 0; i < perp.size(); ++i) {
      acc += on_annihilator[i] * ctx.group().pairing(perp[i], q.representative(c));
    }
    out[c] = acc * ctx.annihilator().weight();
  }
  return GroupFunction(ctx.quotient_space(), std::move(out));
}

GroupFunction periodize(const Quotient& quotient, const GroupFunction& f) {
  const auto& group = quotient.parent();
  if (!(f.space() == group_space(group))) throw Error(Errc::mismatch, "periodize: input is not a function on G");
  const auto& h = quotient.subgroup();
  std::vector<Complex> out(quotient.size());
  for (std::size_t c = 0; c < quotient.size(); ++c) {
    Complex acc{};
    for (auto e : h.elements()) acc += f[group.add(quotient.representative(c), e)];
    out[c] = acc * h.weight();
  }
  return GroupFunction(quotient_space(quotient), std::move(out));
}

GroupFunction modulate(const FiniteGroup& group, const GroupFunction& f, std::size_t omega) {
  if (f.size() != group.order() || omega >= group.order()) throw Error(Errc::mismatch, "modulate: size mismatch");
  auto out = f;
  for (std::size_t x = 0; x < f.size(); ++x) out[x] *= group.pairing(omega, x);
  return out;
}

GroupFunction translate(const FiniteGroup& group, const GroupFunction& f, std::size_t z) {
  if (f.size() != group.order() || z >= group.order()) throw Error(Errc::mismatch, "translate: size mismatch");
  auto out = f;
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[group.subtract(x, z)];
  return out;
}

GroupFunction translate(const Quotient& quotient, const GroupFunction& g, std::size_t coset) {
  if (!(g.space() == quotient_space(quotient)) || coset >= quotient.size()) {
    throw Error(Errc::mismatch, "translate: not a function on G/H");
  }
  auto out = g;
  for (std::size_t c = 0; c < g.size(); ++c) out[c] = g[quotient.subtract(c, coset)];
  return out;
}

GroupFunction modulate(const Quotient& quotient, const GroupFunction& g, std::size_t eta) {
  if (!(g.space() == quotient_space(quotient))) throw Error(Errc::mismatch, "modulate: not a function on G/H");
  const auto& group = quotient.parent();
  for (auto h : quotient.subgroup().elements()) {
    if (group.pairing_phase(eta, h) != 0) throw Error(Errc::mismatch, "modulate: character is not in H^perp");
  }
  auto out = g;
  for (std::size_t c = 0; c < g.size(); ++c) out[c] *= group.pairing(eta, quotient.representative(c));
  return out;
}

TimeFreqFunction stft(const FiniteGroup& group, const GroupFunction& f, const GroupFunction& window) {
  const auto space = group_space(group);
  if (!(f.space() == space) || !(window.space() == space)) throw Error(Errc::mismatch, "stft: inputs must live on G");
  const auto n = group.order();
  const DualGroup dual(group);
  TimeFreqFunction out(n, n, dual.point_weight() * group.point_weight());
  for (std::size_t omega = 0; omega < n; ++omega) {
    for (std::size_t x = 0; x < n; ++x) {
      Complex acc{};
      for (std::size_t y = 0; y < n; ++y) {
        acc += f[y] * std::conj(window[group.subtract(y, x)]) * std::conj(group.pairing(omega, y));
      }
      out(omega, x) = acc * group.weight();
    }
  }
  return out;
}

}  // namespace qstft
