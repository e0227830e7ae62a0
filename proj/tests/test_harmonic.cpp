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

#include "qstft/error.hpp"
#include "qstft/harmonic.hpp"
#include "support.hpp"

using namespace qstft;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

struct Case {
  std::vector<std::int64_t> factors;
  std::vector<GroupElement> gens;
  Weight wG{1};
};

const std::vector<Case> kCorpus = {
    {{4}, {{2}}},         {{6}, {{3}}},           {{2, 4}, {{0, 2}}},    {{3, 3}, {{1, 1}}},
    {{8}, {{4}}},         {{2, 2, 2}, {{1, 1, 0}}}, {{12}, {{4}}},       {{5}, {}},
    {{6}, {{1}}},         {{6}, {{2}}, Weight{1, 3}}, {{2, 6}, {{1, 3}}, Weight{5, 2}},
};

Context make(const Case& c) { return Context(build_group(c.factors, c.wG), generate_subgroup(build_group(c.factors, c.wG), c.gens)); }

oracle::Setup setup(const Case& c) { return oracle::Setup(c.factors, c.gens, to_double(c.wG)); }

}  // namespace

TEST_CASE("fourier examples on Z4", "[harmonic][fourier]") {
  const auto G = build_group({4});
  const auto S = group_space(G);
  REQUIRE_CLOSE(testing::values(fourier(G, GroupFunction::delta(S, 0))), (std::vector<Complex>(4, 1.0)), 1e-15);
  REQUIRE_CLOSE(testing::values(fourier(G, GroupFunction::constant(S, 1.0))), (std::vector<Complex>{4, 0, 0, 0}),
                1e-15);
  const auto f = inverse_fourier(G, GroupFunction::delta(dual_space(G), 0));
  REQUIRE_CLOSE(testing::values(f), (std::vector<Complex>(4, 0.25)), 1e-15);
  CHECK(fourier(G, GroupFunction::delta(S, 0)).space() == dual_space(G));
}

TEST_CASE("fourier agrees with the tuple oracle, both paths", "[harmonic][fourier][property]") {
  for (const auto& c : kCorpus) {
    const auto ctx = make(c);
    const auto s = setup(c);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto f = testing::random(ctx.group_space(), seed);
      const auto expected = oracle::dft(s, testing::values(f));
      REQUIRE_CLOSE(testing::values(fourier(ctx.group(), f)), expected, 1e-12);
      REQUIRE_CLOSE(testing::values(fourier(ctx.group(), f, FourierPath::separable)), expected, 1e-12);
    }
  }
}

TEST_CASE("Plancherel and inversion on G", "[harmonic][fourier][property]") {
  for (const auto& c : kCorpus) {
    const auto ctx = make(c);
    for (std::uint64_t seed = 10; seed < 15; ++seed) {
      const auto f = testing::random(ctx.group_space(), seed);
      const auto F = fourier(ctx.group(), f);
      CHECK_THAT(F.norm(2.0), WithinRel(f.norm(2.0), 1e-12));
      REQUIRE_CLOSE(testing::values(inverse_fourier(ctx.group(), F)), testing::values(f), 1e-12);
      REQUIRE_CLOSE(testing::values(inverse_fourier(ctx.group(), F, FourierPath::separable)), testing::values(f),
                    1e-12);
    }
  }
}

TEST_CASE("inverse round trip on Z2 x Z4", "[harmonic][fourier]") {
  const auto G = build_group({2, 4});
  const auto f = testing::random(group_space(G), 77);
  REQUIRE_CLOSE(testing::values(inverse_fourier(G, fourier(G, f))), testing::values(f), 1e-12);
  REQUIRE_CLOSE(testing::values(inverse_fourier(G, fourier(G, GroupFunction::delta(group_space(G), 0)))),
                testing::values(GroupFunction::delta(group_space(G), 0)), 1e-12);
}

TEST_CASE("periodize examples", "[harmonic][periodize]") {
  const Context ctx({4}, {{2}});
  const GroupFunction f(ctx.group_space(), {1.0, 2.0, 3.0, 4.0});
  CHECK(testing::values(periodize(ctx.quotient(), f)) == std::vector<Complex>{4.0, 6.0});
  CHECK(testing::values(periodize(ctx.quotient(), GroupFunction::delta(ctx.group_space(), 0))) ==
        std::vector<Complex>{1.0, 0.0});

  SECTION("function from another group is a mismatch") {
    const Context other({6}, {{3}});
    try {
      periodize(ctx.quotient(), GroupFunction::zeros(other.group_space()));
      FAIL("expected mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::mismatch);
    }
  }
}

TEST_CASE("Weil formula and periodization oracle", "[harmonic][periodize][property]") {
  for (const auto& c : kCorpus) {
    const auto ctx = make(c);
    const auto s = setup(c);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto f = testing::random(ctx.group_space(), seed);
      const auto R = periodize(ctx.quotient(), f);
      REQUIRE_CLOSE(testing::values(R), oracle::periodize(s, testing::values(f)), 1e-13);
      Complex lhs{}, rhs{};
      for (auto z : f.values()) lhs += z * f.weight();
      for (auto z : R.values()) rhs += z * R.weight();
      CHECK(relative_difference(lhs, rhs) <= 1e-12);
    }
  }
}

TEST_CASE("Fourier slice relation and quotient Plancherel", "[harmonic][slice][property]") {
  for (const auto& c : kCorpus) {
    const auto ctx = make(c);
    const auto s = setup(c);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto f = testing::random(ctx.group_space(), seed);
      const auto full = oracle::dft(s, testing::values(f));
      const auto R = periodize(ctx.quotient(), f);
      const auto sliced = fourier(ctx, R);
      REQUIRE(sliced.size() == ctx.annihilator().size());
      for (std::size_t j = 0; j < sliced.size(); ++j) {
        CHECK(relative_difference(sliced[j], full[ctx.annihilator().elements()[j]]) <= 1e-12);
      }
      CHECK_THAT(sliced.norm(2.0), WithinRel(R.norm(2.0), 1e-12));
      REQUIRE_CLOSE(testing::values(inverse_fourier(ctx, sliced)), testing::values(R), 1e-12);
    }
  }
}

TEST_CASE("modulation and translation", "[harmonic][property]") {
  for (const auto& c : kCorpus) {
    const auto ctx = make(c);
    const auto& G = ctx.group();
    SplitMix64 rng(G.order() * 31);
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = random_function(ctx.group_space(), rng);
      const auto w = rng.below(G.order()), z = rng.below(G.order());
      CHECK_THAT(modulate(G, f, w).norm(2.0), WithinRel(f.norm(2.0), 1e-12));
      CHECK_THAT(translate(G, f, z).norm(2.0), WithinRel(f.norm(2.0), 1e-12));
      REQUIRE_CLOSE(testing::values(fourier(G, modulate(G, f, w))), testing::values(translate(G, fourier(G, f), w)),
                    1e-12);
      CHECK(translate(G, f, z)[z] == f[0]);

      const auto g = random_function(ctx.quotient_space(), rng);
      const auto coset = rng.below(ctx.quotient().size());
      CHECK_THAT(translate(ctx.quotient(), g, coset).norm(2.0), WithinRel(g.norm(2.0), 1e-12));
      const auto eta = ctx.annihilator().elements()[rng.below(ctx.annihilator().size())];
      CHECK_THAT(modulate(ctx.quotient(), g, eta).norm(2.0), WithinRel(g.norm(2.0), 1e-12));
    }
  }
  const Context ctx({4}, {{2}});
  CHECK_THROWS_AS(modulate(ctx.quotient(), GroupFunction::zeros(ctx.quotient_space()), 1), Error);
}

TEST_CASE("stft examples", "[harmonic][stft]") {
  const Context ctx({6}, {});
  const auto& G = ctx.group();
  const auto f = testing::random(ctx.group_space(), 3);

  SECTION("delta window picks the sample") {
    const auto V = stft(G, f, GroupFunction::delta(ctx.group_space(), 0));
    for (std::size_t w = 0; w < 6; ++w) {
      for (std::size_t x = 0; x < 6; ++x) CHECK(std::abs(V(w, x) - f[x] * std::conj(G.pairing(w, x))) < 1e-14);
    }
  }
  SECTION("zero input") {
    const auto V = stft(G, GroupFunction::zeros(ctx.group_space()), f);
    CHECK(V.norm(kInf) == 0.0);
  }
  SECTION("norm identity against a direct double sum") {
    const auto g = testing::random(ctx.group_space(), 4);
    const oracle::Setup s({6}, {});
    double direct = 0.0;
    for (std::size_t w = 0; w < 6; ++w) {
      for (std::size_t x = 0; x < 6; ++x) {
        Complex acc{};
        for (std::size_t y = 0; y < 6; ++y) {
          acc += f[y] * std::conj(g[(y + 6 - x) % 6]) * std::conj(s.chi(s.elements[w], s.elements[y]));
        }
        direct += std::norm(acc) / 6.0;
      }
    }
    CHECK_THAT(direct, WithinRel(std::pow(g.norm(2.0) * f.norm(2.0), 2), 1e-10));
    CHECK_THAT(std::pow(stft(G, f, g).norm(2.0), 2), WithinRel(direct, 1e-12));
  }
}
