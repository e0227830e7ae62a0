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

#include "qstft/bounds.hpp"
#include "qstft/error.hpp"
#include "qstft/spectral.hpp"
#include "support.hpp"

using namespace qstft;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

MultiplierSpec diag_instance(const Context& ctx) {
  return {TimeFreqFunction(ctx.dual().order(), ctx.quotient().size(), GroupFunction::constant(ctx.grid_space(), 1.0)),
          GroupFunction::delta(ctx.group_space(), 0), GroupFunction::delta(ctx.group_space(), 0),
          GroupFunction::delta(ctx.quotient_space(), 0)};
}

Exponents sample(Theorem theorem, SplitMix64& rng) {
  Exponents e;
  if (uses_symbol_exponent(theorem)) {
    const auto [lo, hi] = symbol_exponent_range(theorem);
    e.r = lo + (hi - lo) * rng.uniform();
  }
  if (uses_operator_exponent(theorem)) {
    const auto [lo, hi] = operator_exponent_range(theorem, e.r);
    switch (rng.next() % 4) {
      case 0: e.p = lo; break;
      case 1: e.p = hi; break;
      case 2: e.p = std::isinf(hi) ? 2.0 : hi; break;
      default: e.p = std::isinf(hi) ? 1.0 / (1.0 / lo * rng.uniform()) : lo + (hi - lo) * rng.uniform();
    }
    e.p = std::clamp(e.p, lo, hi);
  }
  return e;
}

}  // namespace

TEST_CASE("theorem names round-trip", "[bounds]") {
  for (Theorem t : kAllTheorems) CHECK(theorem_from_string(to_string(t)) == t);
  CHECK_FALSE(theorem_from_string("nope").has_value());
}

TEST_CASE("interpolation exponents", "[bounds]") {
  CHECK(interpolation_theta(1.0) == 1.0);
  CHECK(interpolation_theta(2.0) == 0.0);
  CHECK_THAT(interpolation_theta(4.0 / 3.0), WithinAbs(0.5, 1e-15));
  CHECK_THAT(holder_t(4.0 / 3.0, 4.0 / 3.0), WithinAbs(0.0, 1e-15));
  CHECK_THAT(holder_t(4.0 / 3.0, 4.0), WithinAbs(1.0, 1e-14));
  CHECK_THAT(holder_t(1.0, kInf), WithinAbs(1.0, 1e-15));
  CHECK_THAT(multilinear_t(4.0 / 3.0, 4.0 / 3.0), WithinAbs(1.0, 1e-14));
  CHECK_THAT(multilinear_t(4.0 / 3.0, 4.0), WithinAbs(0.0, 1e-14));
  CHECK(multilinear_t(2.0, 2.0) == 1.0);
  for (double r : {1.0, 1.2, 1.5, 1.9}) {
    const double rp = conjugate_exponent(r);
    for (double p : {r, 2.0, rp}) {
      if (std::isinf(p)) continue;
      const double t = multilinear_t(r, p);
      CHECK_THAT(t / r + (1 - t) / rp, WithinAbs(1.0 / p, 1e-14));
    }
  }
}

TEST_CASE("bound predicate", "[bounds]") {
  CHECK(bound_holds(1.0, 1.0));
  CHECK(bound_holds(1.0 + 5e-10, 1.0));
  CHECK_FALSE(bound_holds(1.0 + 1e-8, 1.0));
  CHECK(bound_holds(5e-13, 0.0));
  CHECK_FALSE(bound_holds(1e-11, 0.0));
}

TEST_CASE("diagonal instance closed form", "[bounds]") {
  const Context ctx({4}, {{2}});
  const auto report = bound_report(Theorem::schatten_inf_l1_symbol, ctx, diag_instance(ctx));
  CHECK_THAT(report.computed_lhs, WithinRel(1.0, 1e-14));
  CHECK_THAT(report.stated_rhs, WithinRel(2.0, 1e-14));
  CHECK(report.lhs_exact);
  CHECK(report.pass);
  CHECK_THAT(report.slack, WithinAbs(1.0, 1e-14));
}

TEST_CASE("exponents outside the hypotheses are rejected", "[bounds]") {
  const Context ctx({4}, {{2}});
  const auto spec = diag_instance(ctx);
  const auto code = [&](Theorem t, Exponents e) {
    try {
      bound_report(t, ctx, spec, e);
    } catch (const Error& err) {
      return err.code();
    }
    return Errc::io;
  };
  CHECK(code(Theorem::lp_holder, {2.0, 2.0}) == Errc::range);
  CHECK(code(Theorem::lp_multilinear, {2.0, 2.5}) == Errc::range);
  CHECK(code(Theorem::lp_multilinear, {1.2, 1.5}) == Errc::range);
  CHECK(code(Theorem::schatten_p_lp_symbol, {0.5, 1.0}) == Errc::range);
  CHECK(code(Theorem::lp_schur, {0.9, 1.0}) == Errc::range);
}

TEST_CASE("endpoint interpolation reports the interpolated constant", "[bounds]") {
  const Context ctx({6}, {{3}});
  const auto spec = testing::random_spec(ctx, 17);
  const auto report = bound_report(Theorem::lp_endpoint_interpolation, ctx, spec, {3.0, 1.0}, {200, 1});
  REQUIRE(report.extra_rhs.count("interpolated"));
  const double p = 3.0, pp = 1.5;
  CHECK_THAT(report.extra_rhs.at("interpolated"),
             WithinRel(std::pow(report.constants.at("c1"), 1 / p) * std::pow(report.constants.at("c2"), 1 / pp), 1e-12));
  CHECK_FALSE(report.lhs_exact);
  CHECK(report.pass);
}

TEST_CASE("every theorem holds on seeded specs", "[bounds][property]") {
  const std::vector<std::pair<std::vector<std::int64_t>, std::vector<GroupElement>>> groups = {
      {{4}, {{2}}}, {{6}, {{3}}}, {{2, 4}, {{0, 2}}}, {{3, 3}, {{1, 1}}}, {{8}, {{4}}}};
  std::size_t checked = 0;
  double worst = 0.0;
  for (const auto& [factors, gens] : groups) {
    const Context ctx(factors, gens);
    for (std::uint64_t seed = 0; seed < 44; ++seed) {
      const auto spec = testing::random_spec(ctx, 1000 + 7 * seed);
      SplitMix64 rng(seed);
      for (Theorem t : kAllTheorems) {
        const Exponents e = sample(t, rng);
        const auto report = bound_report(t, ctx, spec, e, {100, seed});
        INFO(to_string(t) << " p=" << e.p << " r=" << e.r << " seed=" << seed);
        CHECK(report.pass);
        CHECK(report.computed_lhs >= 0.0);
        if (report.stated_rhs > 0) worst = std::max(worst, report.computed_lhs / report.stated_rhs);
      }
      ++checked;
    }
  }
  CHECK(checked >= 200);
  CHECK(worst > 0.01);
}
