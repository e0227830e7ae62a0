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
#include <vector>

#include "catch_amalgamated.hpp"
#include "oracle.hpp"
#include "qstft/corpus.hpp"
#include "qstft/function.hpp"
#include "qstft/operators.hpp"

namespace testing {

inline std::vector<std::complex<double>> values(const qstft::GroupFunction& f) {
  return {f.values().begin(), f.values().end()};
}

inline std::vector<std::complex<double>> values(const qstft::TimeFreqFunction& F) { return values(F.flat()); }

inline qstft::GroupFunction random(const qstft::Space& space, std::uint64_t seed) {
  qstft::SplitMix64 rng(seed);
  return qstft::random_function(space, rng);
}

inline qstft::TimeFreqFunction random_grid(const qstft::Context& ctx, std::uint64_t seed) {
  return {ctx.dual().order(), ctx.quotient().size(), random(ctx.grid_space(), seed)};
}

inline qstft::MultiplierSpec random_spec(const qstft::Context& ctx, std::uint64_t seed) {
  return {random_grid(ctx, seed), random(ctx.group_space(), seed + 1), random(ctx.group_space(), seed + 2),
          random(ctx.quotient_space(), seed + 3)};
}

inline double scale(const std::vector<std::complex<double>>& a) {
  double m = 0.0;
  for (const auto& z : a) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace testing

#define REQUIRE_CLOSE(a, b, tol)                                                                          \
  do {                                                                                                    \
    const auto qstft_a_ = (a);                                                                            \
    const auto qstft_b_ = (b);                                                                            \
    INFO("max |a - b| = " << oracle::max_abs_diff(qstft_a_, qstft_b_) << ", scale " << testing::scale(qstft_b_)); \
    REQUIRE(oracle::max_abs_diff(qstft_a_, qstft_b_) <= (tol) * std::max(1.0, testing::scale(qstft_b_)));  \
  } while (0)
