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
#include <memory>

#include "qstft/function.hpp"
#include "qstft/group.hpp"

namespace qstft {

/// The bundle (G, H, G/H, G^, H^perp) every transform works against.
class Context {
 public:
  Context(FiniteGroup group, const Subgroup& subgroup);
  Context(std::vector<std::int64_t> factors, const std::vector<GroupElement>& generators);

  const FiniteGroup& group() const noexcept { return group_; }
  const Subgroup& subgroup() const noexcept { return quotient_.subgroup(); }
  const Quotient& quotient() const noexcept { return quotient_; }
  const DualGroup& dual() const noexcept { return dual_; }
  const Subgroup& annihilator() const noexcept { return perp_; }

  Space group_space() const { return qstft::group_space(group_); }
  Space quotient_space() const { return qstft::quotient_space(quotient_); }
  Space dual_space() const { return qstft::dual_space(group_); }
  Space annihilator_space() const { return qstft::annihilator_space(perp_); }
  /// Product measure on dual x quotient.
  Weight grid_weight() const { return dual_.point_weight() * quotient_.point_weight(); }
  Space grid_space() const { return {SpaceKind::grid, dual_.order() * quotient_.size(), grid_weight()}; }
  TimeFreqFunction zero_grid() const { return {dual_.order(), quotient_.size(), grid_weight()}; }

  void require(const GroupFunction& f, const Space& expected, const char* what) const;
  void require_grid(const TimeFreqFunction& grid, const char* what) const;

 private:
  FiniteGroup group_;
  Quotient quotient_;
  DualGroup dual_;
  Subgroup perp_;
};

using ContextPtr = std::shared_ptr<const Context>;

enum class FourierPath {
  direct,     ///< O(|G|^2) character sums; the reference definition.
  separable,  ///< one 1-D transform per cyclic factor.
};

/// f^(chi) = sum_x f(x) conj(<x, chi>) w_G, a function on G^.
GroupFunction fourier(const FiniteGroup& group, const GroupFunction& f, FourierPath path = FourierPath::direct);
/// Inverse of `fourier`: f(x) = sum_chi F(chi) <x, chi> w_G^.
GroupFunction inverse_fourier(const FiniteGroup& group, const GroupFunction& spectrum,
                              FourierPath path = FourierPath::direct);

/// Fourier transform on G/H, indexed by the characters in H^perp (in the
/// annihilator's element order).
GroupFunction fourier(const Context& ctx, const GroupFunction& on_quotient);
GroupFunction inverse_fourier(const Context& ctx, const GroupFunction& on_annihilator);

/// R_H f(xH) = sum_{h in H} f(x + h) w_H.
GroupFunction periodize(const Quotient& quotient, const GroupFunction& f);

/// (M_omega f)(x) = <x, chi_omega> f(x). Works for any function indexed by a
/// group with the same factors as `group` (e.g. functions on the dual).
GroupFunction modulate(const FiniteGroup& group, const GroupFunction& f, std::size_t omega);
/// (T_z f)(x) = f(x - z).
GroupFunction translate(const FiniteGroup& group, const GroupFunction& f, std::size_t z);
/// (T_zH g)(xH) = g(xH - zH) on the quotient.
GroupFunction translate(const Quotient& quotient, const GroupFunction& g, std::size_t coset);
/// Quotient-side modulation by eta in H^perp (given as an index into the dual).
GroupFunction modulate(const Quotient& quotient, const GroupFunction& g, std::size_t eta);

/// V_g f(x, omega) = sum_y f(y) conj(g(y - x)) conj(<y, chi_omega>) w_G on G x G^,
/// stored with the dual index as the row.
TimeFreqFunction stft(const FiniteGroup& group, const GroupFunction& f, const GroupFunction& window);

}  // namespace qstft
