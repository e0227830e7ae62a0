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

#include <numeric>
#include <set>

#include "qstft/error.hpp"
#include "qstft/group.hpp"
#include "support.hpp"

using namespace qstft;
using Catch::Matchers::WithinAbs;

namespace {

struct Pair {
  std::vector<std::int64_t> factors;
  std::vector<GroupElement> gens;
};

const std::vector<Pair> kCorpus = {
    {{4}, {{2}}},          {{6}, {{3}}},         {{6}, {{2}}},          {{2, 4}, {{0, 2}}}, {{3, 3}, {{1, 1}}},
    {{8}, {{4}}},          {{2, 2, 2}, {{1, 1, 0}}}, {{12}, {{4}}},     {{4, 4}, {{1, 1}}}, {{5}, {}},
    {{2, 6}, {{1, 3}}},    {{4, 2}, {{2, 1}}},   {{3, 4}, {{0, 2}, {1, 0}}},
};

}  // namespace

TEST_CASE("build_group orders and weights", "[group]") {
  CHECK(build_group({4}).order() == 4);
  CHECK(build_group({2, 3}).order() == 6);
  CHECK(build_group({}).order() == 1);
  CHECK(build_group({}).rank() == 0);

  const auto g = build_group({3, 4}, Weight{1, 2});
  CHECK(g.total_mass() == Weight{6});
  CHECK(g.exponent() == 12);

  SECTION("nonpositive factors are rejected") {
    try {
      build_group({4, 0});
      FAIL("expected invalid-factors");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::invalid_factors);
    }
    CHECK_THROWS_AS(build_group({-2}), Error);
    CHECK_THROWS_AS(build_group({4}, Weight{0}), Error);
  }
}

TEST_CASE("element indexing is lexicographic", "[group]") {
  const auto g = build_group({2, 3});
  CHECK(g.index_of({0, 0}) == 0);
  CHECK(g.index_of({0, 2}) == 2);
  CHECK(g.index_of({1, 0}) == 3);
  CHECK(g.element(5) == GroupElement{1, 2});
  CHECK(g.reduce({5, -1}) == GroupElement{1, 2});
  CHECK(g.add(g.index_of({1, 2}), g.index_of({1, 2})) == g.index_of({0, 1}));
  CHECK(g.negate(g.index_of({1, 1})) == g.index_of({1, 2}));
  CHECK_THROWS_AS(g.index_of({2, 0}), Error);
  CHECK_THROWS_AS(g.index_of({0}), Error);
}

TEST_CASE("generate_subgroup examples", "[group][subgroup]") {
  const auto z4 = build_group({4});
  CHECK(generate_subgroup(z4, {{2}}).elements() == std::vector<std::size_t>{0, 2});
  CHECK(generate_subgroup(z4, {}).elements() == std::vector<std::size_t>{0});

  const auto v4 = build_group({2, 2});
  const auto h = generate_subgroup(v4, {{1, 0}});
  CHECK(h.elements() == std::vector<std::size_t>{v4.index_of({0, 0}), v4.index_of({1, 0})});

  try {
    generate_subgroup(z4, {{7}});
    FAIL("expected invalid-element");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_element);
  }
}

TEST_CASE("generate_subgroup matches closure enumeration", "[group][subgroup][property]") {
  for (const auto& [factors, gens] : kCorpus) {
    const auto G = build_group(factors);
    const oracle::Setup s(factors, gens);
    const auto H = generate_subgroup(G, gens);
    std::vector<std::size_t> expected;
    for (const auto& h : s.H) expected.push_back(G.index_of(h));
    std::sort(expected.begin(), expected.end());
    CHECK(H.elements() == expected);
    CHECK(G.order() % H.size() == 0);
  }
}

TEST_CASE("from_elements rejects non-subgroups", "[group][subgroup]") {
  const auto z4 = build_group({4});
  CHECK_THROWS_AS(Subgroup::from_elements(z4, {0, 1}, {}, Weight{1}), Error);
  CHECK_THROWS_AS(Subgroup::from_elements(z4, {2}, {}, Weight{1}), Error);
  CHECK_NOTHROW(Subgroup::from_elements(z4, {0, 2}, {}, Weight{1}));
}

TEST_CASE("build_quotient examples", "[group][quotient]") {
  const auto z4 = build_group({4});
  const auto q = build_quotient(z4, generate_subgroup(z4, {{2}}));
  CHECK(q.size() == 2);
  CHECK(q.representatives() == std::vector<std::size_t>{0, 1});
  CHECK(q.coset_of(3) == 1);
  CHECK(q.coset_of(2) == 0);

  CHECK(build_quotient(z4, generate_subgroup(z4, {{1}})).size() == 1);
  const auto trivial = build_quotient(z4, generate_subgroup(z4, {}));
  CHECK(trivial.representatives() == std::vector<std::size_t>{0, 1, 2, 3});

  SECTION("foreign subgroup is a mismatch") {
    const auto z6 = build_group({6});
    try {
      build_quotient(z4, generate_subgroup(z6, {{3}}));
      FAIL("expected mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::mismatch);
    }
  }
}

TEST_CASE("quotient partitions the group", "[group][quotient][property]") {
  for (const auto& [factors, gens] : kCorpus) {
    const auto G = build_group(factors);
    const auto H = generate_subgroup(G, gens);
    const auto Q = build_quotient(G, H);
    const oracle::Setup s(factors, gens);
    REQUIRE(Q.size() * H.size() == G.order());
    CHECK(Q.representative(0) == 0);
    std::vector<std::size_t> reps;
    for (const auto& r : s.reps) reps.push_back(G.index_of(r));
    CHECK(Q.representatives() == reps);
    for (std::size_t x = 0; x < G.order(); ++x) CHECK(Q.coset_of(x) == s.coset(G.element(x)));
    for (std::size_t a = 0; a < Q.size(); ++a) {
      for (std::size_t b = 0; b < Q.size(); ++b) {
        CHECK(Q.subtract(a, b) == Q.coset_of(G.subtract(Q.representative(a), Q.representative(b))));
      }
    }
  }
}

TEST_CASE("quotient weight makes fibers sum to the group measure", "[group][quotient]") {
  const auto G = build_group({6}, Weight{1, 3});
  const auto H = generate_subgroup(G, {{2}}, Weight{1, 2});
  const auto Q = build_quotient(G, H);
  CHECK(Q.point_weight() * H.point_weight() == G.point_weight());
  CHECK(Q.point_weight() == Weight{2, 3});
}

TEST_CASE("annihilator examples", "[group][dual]") {
  const auto z4 = build_group({4});
  CHECK(annihilator(z4, generate_subgroup(z4, {{2}})).elements() == std::vector<std::size_t>{0, 2});
  CHECK(annihilator(z4, generate_subgroup(z4, {})).size() == 4);
  CHECK(annihilator(z4, generate_subgroup(z4, {{1}})).elements() == std::vector<std::size_t>{0});
}

TEST_CASE("annihilator against character test, and double annihilator", "[group][dual][property]") {
  for (const auto& [factors, gens] : kCorpus) {
    const auto G = build_group(factors);
    const auto H = generate_subgroup(G, gens);
    const oracle::Setup s(factors, gens);
    const auto perp = annihilator(G, H);
    std::vector<std::size_t> expected;
    for (std::size_t k = 0; k < G.order(); ++k) {
      if (s.in_perp(G.element(k))) expected.push_back(k);
    }
    CHECK(perp.elements() == expected);
    CHECK(perp.size() * H.size() == G.order());
    CHECK(double_annihilator(G, H).elements() == H.elements());
  }
}

TEST_CASE("annihilator weight is the dual measure of the quotient", "[group][dual]") {
  const auto G = build_group({6}, Weight{2});
  const auto H = generate_subgroup(G, {{3}});
  const auto Q = build_quotient(G, H);
  const auto perp = annihilator(G, H);
  CHECK(perp.point_weight() == Weight{1} / (Q.point_weight() * static_cast<std::int64_t>(Q.size())));
  CHECK(DualGroup(G).point_weight() == Weight{1, 12});
}

TEST_CASE("eval_character examples", "[group][dual]") {
  const auto z4 = build_group({4});
  const auto i = eval_character(z4, {1}, {1});
  CHECK_THAT(i.real(), WithinAbs(0.0, 1e-15));
  CHECK_THAT(i.imag(), WithinAbs(1.0, 1e-15));
  CHECK(eval_character(z4, {0}, {3}) == Complex{1.0, 0.0});
  const auto v4 = build_group({2, 2});
  CHECK_THAT(std::abs(eval_character(v4, {1, 1}, {1, 1}) - 1.0), WithinAbs(0.0, 1e-15));
  CHECK_THROWS_AS(eval_character(z4, {4}, {0}), Error);
}

TEST_CASE("characters are bicharacters and orthogonal", "[group][dual][property]") {
  for (const auto& [factors, gens] : kCorpus) {
    const auto G = build_group(factors);
    const oracle::Setup s(factors, gens);
    SplitMix64 rng(G.order());
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = rng.below(G.order()), y = rng.below(G.order()), k = rng.below(G.order()),
                 m = rng.below(G.order());
      CHECK(std::abs(G.pairing(k, G.add(x, y)) - G.pairing(k, x) * G.pairing(k, y)) < 1e-12);
      CHECK(std::abs(G.pairing(G.add(k, m), x) - G.pairing(k, x) * G.pairing(m, x)) < 1e-12);
      CHECK(std::abs(std::abs(G.pairing(k, x)) - 1.0) < 1e-15);
      CHECK(std::abs(G.pairing(k, x) - s.chi(G.element(k), G.element(x))) < 1e-12);
    }
    for (std::size_t k = 0; k < G.order(); ++k) {
      for (std::size_t m = 0; m < G.order(); ++m) {
        Complex sum{};
        for (std::size_t x = 0; x < G.order(); ++x) sum += G.pairing(k, x) * std::conj(G.pairing(m, x));
        CHECK(std::abs(sum - (k == m ? static_cast<double>(G.order()) : 0.0)) < 1e-10);
      }
    }
  }
}
