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

#include "qstft/function.hpp"

#include <algorithm>
#include <cmath>

#include "qstft/error.hpp"

namespace qstft {

namespace {
constexpr double kAbsoluteFloor = 1e-14;
}

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::group: return "group";
    case SpaceKind::quotient: return "quotient";
    case SpaceKind::dual: return "dual";
    case SpaceKind::annihilator: return "annihilator";
    case SpaceKind::grid: return "grid";
  }
  return "unknown";
}

Space group_space(const FiniteGroup& group) { return {SpaceKind::group, group.order(), group.point_weight()}; }

Space quotient_space(const Quotient& quotient) {
  return {SpaceKind::quotient, quotient.size(), quotient.point_weight()};
}

Space dual_space(const FiniteGroup& group) {
  const DualGroup dual(group);
  return {SpaceKind::dual, dual.order(), dual.point_weight()};
}

Space annihilator_space(const Subgroup& perp) { return {SpaceKind::annihilator, perp.size(), perp.point_weight()}; }

double lp_norm(std::span<const Complex> values, double weight, double p) {
  if (!(p >= 1.0)) throw Error(Errc::invalid_exponent, "norm exponent must be in [1, inf]");
  if (std::isinf(p)) {
    double m = 0.0;
    for (auto v : values) m = std::max(m, std::abs(v));
    return m;
  }
  double sum = 0.0;
  if (p == 1.0) {
    for (auto v : values) sum += std::abs(v);
    return sum * weight;
  }
  if (p == 2.0) {
    for (auto v : values) sum += std::norm(v);
    return std::sqrt(sum * weight);
  }
  // Factor out the peak so large p neither overflows nor underflows.
  double peak = 0.0;
  for (auto v : values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  for (auto v : values) sum += std::pow(std::abs(v) / peak, p);
  return peak * std::pow(sum, 1.0 / p) * std::pow(weight, 1.0 / p);
}

GroupFunction::GroupFunction(Space space, std::vector<Complex> values)
    : space_(space), values_(std::move(values)) {
  if (values_.size() != space_.size) {
    throw Error(Errc::mismatch, "function has " + std::to_string(values_.size()) + " values but its " +
                                    to_string(space_.kind) + " space has " + std::to_string(space_.size) +
                                    " points");
  }
}

GroupFunction GroupFunction::zeros(Space space) { return constant(space, Complex{}); }

GroupFunction GroupFunction::constant(Space space, Complex value) {
  return GroupFunction(space, std::vector<Complex>(space.size, value));
}

GroupFunction GroupFunction::delta(Space space, std::size_t index) {
  if (index >= space.size) throw Error(Errc::invalid_element, "delta index out of range");
  auto f = zeros(space);
  f[index] = 1.0;
  return f;
}

GroupFunction GroupFunction::indicator(Space space, std::span<const std::size_t> indices) {
  auto f = zeros(space);
  for (auto i : indices) {
    if (i >= space.size) throw Error(Errc::invalid_element, "indicator index out of range");
    f[i] = 1.0;
  }
  return f;
}

void GroupFunction::require_same_space(const GroupFunction& other, const char* op) const {
  if (!(space_ == other.space_)) {
    throw Error(Errc::mismatch, std::string(op) + " on functions over different spaces");
  }
}

Complex GroupFunction::inner(const GroupFunction& other) const {
  require_same_space(other, "inner product");
  Complex sum{};
  for (std::size_t i = 0; i < values_.size(); ++i) sum += values_[i] * std::conj(other.values_[i]);
  return sum * weight();
}

GroupFunction GroupFunction::conj() const {
  auto out = *this;
  for (auto& v : out.values_) v = std::conj(v);
  return out;
}

GroupFunction GroupFunction::scaled(Complex factor) const {
  auto out = *this;
  for (auto& v : out.values_) v *= factor;
  return out;
}

GroupFunction GroupFunction::times(const GroupFunction& other) const {
  require_same_space(other, "pointwise product");
  auto out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] *= other.values_[i];
  return out;
}

GroupFunction GroupFunction::plus(const GroupFunction& other) const {
  require_same_space(other, "sum");
  auto out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] += other.values_[i];
  return out;
}

GroupFunction GroupFunction::minus(const GroupFunction& other) const {
  require_same_space(other, "difference");
  auto out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] -= other.values_[i];
  return out;
}

TimeFreqFunction::TimeFreqFunction(std::size_t rows, std::size_t cols, Weight cell_weight)
    : TimeFreqFunction(rows, cols, cell_weight, std::vector<Complex>(rows * cols)) {}

TimeFreqFunction::TimeFreqFunction(std::size_t rows, std::size_t cols, Weight cell_weight,
                                   std::vector<Complex> values)
    : rows_(rows), cols_(cols), flat_(Space{SpaceKind::grid, rows * cols, cell_weight}, std::move(values)) {}

TimeFreqFunction::TimeFreqFunction(std::size_t rows, std::size_t cols, GroupFunction flat)
    : rows_(rows), cols_(cols), flat_(std::move(flat)) {
  if (flat_.space().kind != SpaceKind::grid || flat_.size() != rows * cols) {
    throw Error(Errc::mismatch, "flat function does not match the grid shape");
  }
}

TimeFreqFunction TimeFreqFunction::times(const TimeFreqFunction& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(Errc::mismatch, "grid shapes differ");
  return TimeFreqFunction(rows_, cols_, flat_.times(other.flat_));
}

TimeFreqFunction TimeFreqFunction::conj() const { return TimeFreqFunction(rows_, cols_, flat_.conj()); }

TimeFreqFunction TimeFreqFunction::scaled(Complex factor) const {
  return TimeFreqFunction(rows_, cols_, flat_.scaled(factor));
}

double relative_difference(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(Errc::mismatch, "compared sequences differ in length");
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
  }
  return diff <= kAbsoluteFloor ? 0.0 : diff / scale;
}

double relative_difference(Complex a, Complex b) {
  const double diff = std::abs(a - b);
  return diff <= kAbsoluteFloor ? 0.0 : diff / std::max(std::abs(a), std::abs(b));
}

double relative_difference(double a, double b) { return relative_difference(Complex(a), Complex(b)); }

}  // namespace qstft
