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
#include "qstft/function.hpp"
#include "support.hpp"

using namespace qstft;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("lp norms with weights", "[function]") {
  const Space s{SpaceKind::group, 4, Weight{1, 2}};
  const GroupFunction f(s, {1.0, -2.0, Complex{0.0, 3.0}, 0.0});
  CHECK_THAT(f.norm(1.0), WithinRel(3.0, 1e-15));
  CHECK_THAT(f.norm(2.0), WithinRel(std::sqrt(7.0), 1e-15));
  CHECK_THAT(f.norm(kInf), WithinRel(3.0, 1e-15));
  CHECK_THAT(f.norm(3.0), WithinRel(std::cbrt(18.0), 1e-14));
  try {
    f.norm(0.5);
    FAIL("expected invalid-exponent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_exponent);
  }
}

TEST_CASE("norms obey the triangle inequality", "[function][property]") {
  const Space s{SpaceKind::group, 12, Weight{3, 7}};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = testing::random(s, seed), b = testing::random(s, seed + 1000);
    for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
      CHECK(a.plus(b).norm(p) <= a.norm(p) + b.norm(p) + 1e-12);
      CHECK(a.norm(p) >= 0.0);
    }
  }
}

TEST_CASE("inner product is weighted and sesquilinear", "[function]") {
  const Space s{SpaceKind::quotient, 3, Weight{2}};
  const GroupFunction a(s, {1.0, Complex{0, 1}, 2.0});
  const GroupFunction b(s, {Complex{0, 1}, 1.0, 1.0});
  CHECK(a.inner(b) == Complex{2.0, 0.0} * (Complex{0, -1} + Complex{0, 1} + 2.0));
  CHECK(std::abs(a.scaled(Complex{0, 2}).inner(b) - Complex{0, 2} * a.inner(b)) < 1e-14);
  CHECK(std::abs(a.inner(b.scaled(Complex{0, 2})) - Complex{0, -2} * a.inner(b)) < 1e-14);
}

TEST_CASE("space mismatches are reported", "[function]") {
  const GroupFunction a = GroupFunction::zeros({SpaceKind::group, 4, Weight{1}});
  const GroupFunction b = GroupFunction::zeros({SpaceKind::quotient, 4, Weight{1}});
  try {
    (void)a.plus(b);
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::mismatch);
  }
  CHECK_THROWS_AS(GroupFunction({SpaceKind::group, 3, Weight{1}}, {1.0}), Error);
}

TEST_CASE("factories", "[function]") {
  const Space s{SpaceKind::group, 5, Weight{1}};
  CHECK(testing::values(GroupFunction::delta(s, 2)) == std::vector<Complex>{0, 0, 1, 0, 0});
  const std::vector<std::size_t> support{0, 3};
  CHECK(testing::values(GroupFunction::indicator(s, support)) == std::vector<Complex>{1, 0, 0, 1, 0});
  CHECK(GroupFunction::constant(s, 2.0).norm(1.0) == 10.0);
}

TEST_CASE("relative_difference uses the larger side and an absolute floor", "[function]") {
  CHECK(relative_difference(1.0, 1.0) == 0.0);
  CHECK_THAT(relative_difference(2.0, 1.0), WithinRel(0.5, 1e-15));
  CHECK_THAT(relative_difference(1.0, 2.0), WithinRel(0.5, 1e-15));
  CHECK(relative_difference(1e-15, 0.0) == 0.0);
  CHECK(relative_difference(1e-13, 0.0) == 1.0);
  const std::vector<Complex> a{1.0, 2.0}, b{1.0, 2.0 + 1e-9};
  CHECK_THAT(relative_difference(a, b), WithinRel(1e-9 / (2.0 + 1e-9), 1e-6));
}

TEST_CASE("time-frequency grid layout", "[function]") {
  TimeFreqFunction F(3, 2, Weight{1, 6});
  F(2, 1) = 5.0;
  CHECK(F.cell(2, 1) == 5);
  CHECK(F.flat()[5] == Complex{5.0});
  CHECK(F.space().kind == SpaceKind::grid);
  CHECK_THAT(F.norm(1.0), WithinRel(5.0 / 6.0, 1e-15));
}
