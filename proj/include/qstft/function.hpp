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

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qstft/group.hpp"

namespace qstft {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class SpaceKind { group, quotient, dual, annihilator, grid };

/// A finite measured index set: `size` points of mass `weight` each.
struct Space {
  SpaceKind kind = SpaceKind::group;
  std::size_t size = 0;
  Weight weight{1};

  double point_weight() const { return to_double(weight); }
  bool operator==(const Space&) const = default;
};

std::string to_string(SpaceKind kind);

Space group_space(const FiniteGroup& group);
Space quotient_space(const Quotient& quotient);
Space dual_space(const FiniteGroup& group);
Space annihilator_space(const Subgroup& perp);

/// (sum_i |v_i|^p w)^(1/p); p = inf gives max |v_i|. Throws for p < 1.
double lp_norm(std::span<const Complex> values, double weight, double p);

/// Complex values over a measured space, in canonical index order.
class GroupFunction {
 public:
  GroupFunction() = default;
  GroupFunction(Space space, std::vector<Complex> values);
  static GroupFunction zeros(Space space);
  static GroupFunction constant(Space space, Complex value);
  static GroupFunction delta(Space space, std::size_t index);
  static GroupFunction indicator(Space space, std::span<const std::size_t> indices);

  const Space& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return values_.size(); }
  double weight() const { return space_.point_weight(); }
  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  Complex operator[](std::size_t i) const { return values_[i]; }
  Complex& operator[](std::size_t i) { return values_[i]; }

  double norm(double p) const { return lp_norm(values_, weight(), p); }
  /// sum_i this_i conj(other_i) w.
  Complex inner(const GroupFunction& other) const;

  GroupFunction conj() const;
  GroupFunction scaled(Complex factor) const;
  GroupFunction times(const GroupFunction& other) const;
  GroupFunction plus(const GroupFunction& other) const;
  GroupFunction minus(const GroupFunction& other) const;

 private:
  void require_same_space(const GroupFunction& other, const char* op) const;

  Space space_;
  std::vector<Complex> values_;
};

/// Function on a dual x time grid, stored row-major (dual index, then
/// time-side index) with the product measure.
class TimeFreqFunction {
 public:
  TimeFreqFunction() = default;
  TimeFreqFunction(std::size_t rows, std::size_t cols, Weight cell_weight);
  TimeFreqFunction(std::size_t rows, std::size_t cols, Weight cell_weight, std::vector<Complex> values);
  TimeFreqFunction(std::size_t rows, std::size_t cols, GroupFunction flat);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return flat_.size(); }
  std::size_t cell(std::size_t row, std::size_t col) const noexcept { return row * cols_ + col; }
  Complex operator()(std::size_t row, std::size_t col) const { return flat_[cell(row, col)]; }
  Complex& operator()(std::size_t row, std::size_t col) { return flat_[cell(row, col)]; }

  const GroupFunction& flat() const noexcept { return flat_; }
  GroupFunction& flat() noexcept { return flat_; }
  const Space& space() const noexcept { return flat_.space(); }
  double norm(double p) const { return flat_.norm(p); }
  Complex inner(const TimeFreqFunction& other) const { return flat_.inner(other.flat_); }

  TimeFreqFunction times(const TimeFreqFunction& other) const;
  TimeFreqFunction conj() const;
  TimeFreqFunction scaled(Complex factor) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  GroupFunction flat_;
};

/// Largest |a_i - b_i| relative to the larger sup norm of the two. Absolute
/// differences up to 1e-14 count as exact agreement.
double relative_difference(std::span<const Complex> a, std::span<const Complex> b);
double relative_difference(Complex a, Complex b);
double relative_difference(double a, double b);

}  // namespace qstft
