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

#include <cstdint>
#include <initializer_list>

#include "qstft/group.hpp"

namespace qstft {

/// SplitMix64 (Steele, Lea, Flood 2014). Every draw is derived with integer
/// arithmetic only, so a seed reproduces the same corpus on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }
  /// Uniform point of the closed unit disc, by rejection from the square.
  Complex unit_disc() noexcept;

  /// Independent child stream keyed by `label`.
  SplitMix64 split(std::uint64_t label) const noexcept;

 private:
  std::uint64_t state_;
};

/// Stream for one check: folds each path component into the seed in turn.
SplitMix64 derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept;

}  // namespace qstft
