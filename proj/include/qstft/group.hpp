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
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace qstft {

using Complex = std::complex<double>;
using Weight = boost::rational<std::int64_t>;

/// Residues (x_1, ..., x_k) with x_j in [0, n_j).
using GroupElement = std::vector<std::int64_t>;

inline double to_double(Weight w) { return boost::rational_cast<double>(w); }

/// Z_{n_1} x ... x Z_{n_k} with a scaled counting measure.
///
/// Elements are addressed by their row-major linear index (first factor most
/// significant), so index order coincides with lexicographic tuple order.
class FiniteGroup {
 public:
  FiniteGroup();
  FiniteGroup(std::vector<std::int64_t> factors, Weight point_weight);

  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::size_t order() const noexcept { return order_; }
  Weight point_weight() const noexcept { return weight_; }
  double weight() const noexcept { return weight_value_; }
  Weight total_mass() const { return weight_ * static_cast<std::int64_t>(order_); }
  /// Least common multiple of the factors; every pairing phase lives in Z_exponent.
  std::int64_t exponent() const noexcept { return exponent_; }

  bool is_valid(const GroupElement& x) const noexcept;
  std::size_t index_of(const GroupElement& x) const;
  GroupElement element(std::size_t index) const;
  GroupElement reduce(GroupElement x) const;

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;
  std::size_t subtract(std::size_t a, std::size_t b) const;

  /// Integer m with <x, chi_k> = exp(2 pi i m / exponent()).
  std::int64_t pairing_phase(std::size_t k, std::size_t x) const;
  /// <x, chi_k> = exp(2 pi i sum_j x_j k_j / n_j).
  Complex pairing(std::size_t k, std::size_t x) const;
  /// exp(2 pi i m / exponent()) for m taken modulo exponent().
  Complex root(std::int64_t m) const;

  bool same_structure(const FiniteGroup& other) const noexcept {
    return factors_ == other.factors_ && weight_ == other.weight_;
  }

 private:
  std::int64_t digit(std::size_t index, std::size_t axis) const noexcept {
    return static_cast<std::int64_t>(index / strides_[axis]) % factors_[axis];
  }

  std::vector<std::int64_t> factors_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;
  Weight weight_{1};
  double weight_value_ = 1.0;
  std::int64_t exponent_ = 1;
  std::shared_ptr<const std::vector<Complex>> roots_;
  // |G| x |G| phase table, present for small groups only.
  std::shared_ptr<const std::vector<std::int32_t>> phases_;
};

FiniteGroup build_group(std::vector<std::int64_t> factors, Weight point_weight = Weight{1});

class Subgroup {
 public:
  /// Wraps an explicit element set after checking it is closed, contains the
  /// identity and is closed under negation.
  static Subgroup from_elements(const FiniteGroup& parent, std::vector<std::size_t> elements,
                                std::vector<GroupElement> generators, Weight point_weight);

  const FiniteGroup& parent() const noexcept { return parent_; }
  /// Ascending linear indices into the parent.
  const std::vector<std::size_t>& elements() const noexcept { return elements_; }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(std::size_t index) const { return membership_.at(index); }
  Weight point_weight() const noexcept { return weight_; }
  double weight() const noexcept { return to_double(weight_); }

  bool operator==(const Subgroup& other) const {
    return parent_.same_structure(other.parent_) && elements_ == other.elements_;
  }

 private:
  Subgroup() = default;

  FiniteGroup parent_;
  std::vector<std::size_t> elements_;
  std::vector<GroupElement> generators_;
  std::vector<bool> membership_;
  Weight weight_{1};
};

/// Smallest subgroup containing `generators`, by closure iteration.
Subgroup generate_subgroup(const FiniteGroup& group, const std::vector<GroupElement>& generators,
                           Weight point_weight = Weight{1});

/// G/H with one lexicographically smallest representative per coset.
///
/// The quotient weight is w_G / w_H so that summing over H and then G/H
/// reproduces the sum over G exactly.
class Quotient {
 public:
  const FiniteGroup& parent() const noexcept { return parent_; }
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  std::size_t size() const noexcept { return reps_.size(); }
  const std::vector<std::size_t>& representatives() const noexcept { return reps_; }
  std::size_t representative(std::size_t coset) const { return reps_.at(coset); }
  std::size_t coset_of(std::size_t x) const { return coset_of_.at(x); }
  const std::vector<std::size_t>& coset_index() const noexcept { return coset_of_; }
  /// Coset of rep(a) - rep(b).
  std::size_t subtract(std::size_t a, std::size_t b) const { return sub_[a * size() + b]; }
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const { return subtract(0, a); }
  Weight point_weight() const noexcept { return weight_; }
  double weight() const noexcept { return to_double(weight_); }

 private:
  friend Quotient build_quotient(const FiniteGroup&, const Subgroup&);
  Quotient(FiniteGroup parent, Subgroup subgroup) : parent_(std::move(parent)), subgroup_(std::move(subgroup)) {}

  FiniteGroup parent_;
  Subgroup subgroup_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> coset_of_;
  std::vector<std::size_t> sub_;
  Weight weight_{1};
};

Quotient build_quotient(const FiniteGroup& group, const Subgroup& subgroup);

/// Character group of G. Characters chi_k are indexed by elements k of a group
/// with the same factors; the measure is the Plancherel dual 1/(|G| w_G).
class DualGroup {
 public:
  explicit DualGroup(const FiniteGroup& group);

  const FiniteGroup& base() const noexcept { return base_; }
  std::size_t order() const noexcept { return base_.order(); }
  Weight point_weight() const noexcept { return base_.point_weight(); }
  double weight() const noexcept { return base_.weight(); }

 private:
  FiniteGroup base_;
};

/// H^perp = {k : <h, chi_k> = 1 for all h in H}, decided in exact integer
/// arithmetic. Returned as a subgroup of the dual's base group, weighted as the
/// dual measure of G/H.
Subgroup annihilator(const FiniteGroup& group, const Subgroup& subgroup);

/// (H^perp)^perp computed back inside G (the dual of the dual is G itself).
Subgroup double_annihilator(const FiniteGroup& group, const Subgroup& subgroup);

Complex eval_character(const FiniteGroup& group, const GroupElement& k, const GroupElement& x);

}  // namespace qstft
