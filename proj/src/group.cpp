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

#include "qstft/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qstft/error.hpp"

namespace qstft {

namespace {

constexpr std::size_t kPhaseTableLimit = 1024;

std::string describe(const GroupElement& x) {
  std::string out = "(";
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(x[j]);
  }
  return out + ")";
}

std::shared_ptr<const std::vector<Complex>> make_roots(std::int64_t exponent) {
  auto roots = std::make_shared<std::vector<Complex>>(static_cast<std::size_t>(exponent));
  for (std::int64_t m = 0; m < exponent; ++m) {
    // Reduce to the first octant-ish range so that exact symmetric points
    // (1, i, -1, -i) come out exact.
    const std::int64_t four_m = 4 * m;
    if (four_m % exponent == 0) {
      static constexpr Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      (*roots)[m] = quarter[(four_m / exponent) % 4];
      continue;
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(exponent);
    (*roots)[m] = Complex(std::cos(angle), std::sin(angle));
  }
  return roots;
}

// Indices of `group` annihilated by every element of `others` (a subset of a
// group with identical factors, so the pairing is symmetric).
std::vector<std::size_t> annihilated_by(const FiniteGroup& group, const std::vector<std::size_t>& others) {
  std::vector<std::size_t> result;
  for (std::size_t k = 0; k < group.order(); ++k) {
    const bool kills = std::all_of(others.begin(), others.end(),
                                   [&](std::size_t h) { return group.pairing_phase(k, h) == 0; });
    if (kills) result.push_back(k);
  }
  return result;
}

}  // namespace

FiniteGroup::FiniteGroup() : FiniteGroup({}, Weight{1}) {}

FiniteGroup::FiniteGroup(std::vector<std::int64_t> factors, Weight point_weight)
    : factors_(std::move(factors)), weight_(point_weight) {
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (factors_[j] <= 0) {
      throw Error(Errc::invalid_factors,
                  "factor " + std::to_string(j) + " is " + std::to_string(factors_[j]) + ", must be >= 1");
    }
  }
  if (weight_ <= 0) throw Error(Errc::invalid_factors, "point weight must be positive");
  weight_value_ = to_double(weight_);

  strides_.assign(factors_.size(), 1);
  order_ = 1;
  for (std::size_t j = factors_.size(); j-- > 0;) {
    strides_[j] = order_;
    order_ *= static_cast<std::size_t>(factors_[j]);
  }
  exponent_ = 1;
  for (auto n : factors_) exponent_ = std::lcm(exponent_, n);
  roots_ = make_roots(exponent_);

  if (order_ <= kPhaseTableLimit) {
    auto table = std::make_shared<std::vector<std::int32_t>>(order_ * order_);
    for (std::size_t k = 0; k < order_; ++k) {
      for (std::size_t x = 0; x < order_; ++x) {
        (*table)[k * order_ + x] = static_cast<std::int32_t>(pairing_phase(k, x));
      }
    }
    phases_ = std::move(table);
  }
}

bool FiniteGroup::is_valid(const GroupElement& x) const noexcept {
  if (x.size() != factors_.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 0 || x[j] >= factors_[j]) return false;
  }
  return true;
}

std::size_t FiniteGroup::index_of(const GroupElement& x) const {
  if (!is_valid(x)) throw Error(Errc::invalid_element, describe(x) + " is not an element of the group");
  std::size_t index = 0;
  for (std::size_t j = 0; j < x.size(); ++j) index += static_cast<std::size_t>(x[j]) * strides_[j];
  return index;
}

GroupElement FiniteGroup::element(std::size_t index) const {
  if (index >= order_) throw Error(Errc::invalid_element, "index " + std::to_string(index) + " out of range");
  GroupElement x(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) x[j] = digit(index, j);
  return x;
}

GroupElement FiniteGroup::reduce(GroupElement x) const {
  if (x.size() != factors_.size()) throw Error(Errc::invalid_element, describe(x) + " has the wrong rank");
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] %= factors_[j];
    if (x[j] < 0) x[j] += factors_[j];
  }
  return x;
}

std::size_t FiniteGroup::add(std::size_t a, std::size_t b) const {
  std::size_t out = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    out += static_cast<std::size_t>((digit(a, j) + digit(b, j)) % factors_[j]) * strides_[j];
  }
  return out;
}

std::size_t FiniteGroup::negate(std::size_t a) const {
  std::size_t out = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    out += static_cast<std::size_t>((factors_[j] - digit(a, j)) % factors_[j]) * strides_[j];
  }
  return out;
}

std::size_t FiniteGroup::subtract(std::size_t a, std::size_t b) const {
  std::size_t out = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    out += static_cast<std::size_t>((digit(a, j) - digit(b, j) + factors_[j]) % factors_[j]) * strides_[j];
  }
  return out;
}

std::int64_t FiniteGroup::pairing_phase(std::size_t k, std::size_t x) const {
  if (phases_) return (*phases_)[k * order_ + x];
  std::int64_t phase = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const std::int64_t scale = exponent_ / factors_[j];
    phase = (phase + (digit(k, j) * digit(x, j) % factors_[j]) * scale) % exponent_;
  }
  return phase;
}

Complex FiniteGroup::pairing(std::size_t k, std::size_t x) const {
  return (*roots_)[static_cast<std::size_t>(pairing_phase(k, x))];
}

Complex FiniteGroup::root(std::int64_t m) const {
  m %= exponent_;
  if (m < 0) m += exponent_;
  return (*roots_)[static_cast<std::size_t>(m)];
}

FiniteGroup build_group(std::vector<std::int64_t> factors, Weight point_weight) {
  return FiniteGroup(std::move(factors), point_weight);
}

Subgroup Subgroup::from_elements(const FiniteGroup& parent, std::vector<std::size_t> elements,
                                 std::vector<GroupElement> generators, Weight point_weight) {
  if (point_weight <= 0) throw Error(Errc::mismatch, "subgroup weight must be positive");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<bool> member(parent.order(), false);
  for (auto e : elements) {
    if (e >= parent.order()) throw Error(Errc::invalid_element, "subgroup element index out of range");
    member[e] = true;
  }
  if (elements.empty() || !member[0]) throw Error(Errc::mismatch, "subset does not contain the identity");
  for (auto a : elements) {
    if (!member[parent.negate(a)]) throw Error(Errc::mismatch, "subset is not closed under negation");
    for (auto b : elements) {
      if (!member[parent.add(a, b)]) throw Error(Errc::mismatch, "subset is not closed under addition");
    }
  }
  if (parent.order() % elements.size() != 0) throw Error(Errc::mismatch, "subgroup order does not divide group order");

  Subgroup h;
  h.parent_ = parent;
  h.elements_ = std::move(elements);
  h.generators_ = std::move(generators);
  h.membership_ = std::move(member);
  h.weight_ = point_weight;
  return h;
}

Subgroup generate_subgroup(const FiniteGroup& group, const std::vector<GroupElement>& generators,
                           Weight point_weight) {
  std::vector<std::size_t> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(group.index_of(g));

  std::vector<bool> member(group.order(), false);
  std::vector<std::size_t> elements{0};
  member[0] = true;
  // Breadth-first closure: every new element is an old element plus a generator.
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (auto g : gens) {
      const auto sum = group.add(elements[next], g);
      if (!member[sum]) {
        member[sum] = true;
        elements.push_back(sum);
      }
    }
  }
  return Subgroup::from_elements(group, std::move(elements), generators, point_weight);
}

std::size_t Quotient::add(std::size_t a, std::size_t b) const {
  return coset_of_[parent_.add(reps_.at(a), reps_.at(b))];
}

Quotient build_quotient(const FiniteGroup& group, const Subgroup& subgroup) {
  if (!group.same_structure(subgroup.parent())) {
    throw Error(Errc::mismatch, "subgroup belongs to a different group");
  }
  Quotient q(group, subgroup);
  constexpr auto unset = static_cast<std::size_t>(-1);
  q.coset_of_.assign(group.order(), unset);
  // Ascending scan: the first unvisited element is the lexicographically
  // smallest member of its coset.
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (q.coset_of_[x] != unset) continue;
    const auto coset = q.reps_.size();
    q.reps_.push_back(x);
    for (auto h : subgroup.elements()) q.coset_of_[group.add(x, h)] = coset;
  }
  const auto n = q.reps_.size();
  q.sub_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      q.sub_[a * n + b] = q.coset_of_[group.subtract(q.reps_[a], q.reps_[b])];
    }
  }
  q.weight_ = group.point_weight() / subgroup.point_weight();
  return q;
}

DualGroup::DualGroup(const FiniteGroup& group)
    : base_(group.factors(), Weight{1} / (group.point_weight() * static_cast<std::int64_t>(group.order()))) {}

Subgroup annihilator(const FiniteGroup& group, const Subgroup& subgroup) {
  if (!group.same_structure(subgroup.parent())) {
    throw Error(Errc::mismatch, "subgroup belongs to a different group");
  }
  const DualGroup dual(group);
  const auto quotient_order = static_cast<std::int64_t>(group.order() / subgroup.size());
  const Weight quotient_weight = group.point_weight() / subgroup.point_weight();
  return Subgroup::from_elements(dual.base(), annihilated_by(group, subgroup.elements()), {},
                                 Weight{1} / (quotient_weight * quotient_order));
}

Subgroup double_annihilator(const FiniteGroup& group, const Subgroup& subgroup) {
  const auto perp = annihilator(group, subgroup);
  return Subgroup::from_elements(group, annihilated_by(group, perp.elements()), {}, subgroup.point_weight());
}

Complex eval_character(const FiniteGroup& group, const GroupElement& k, const GroupElement& x) {
  return group.pairing(group.index_of(k), group.index_of(x));
}

}  // namespace qstft
