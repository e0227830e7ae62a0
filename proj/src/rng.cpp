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

#include "qstft/rng.hpp"

namespace qstft {

Complex SplitMix64::unit_disc() noexcept {
  for (;;) {
    const double re = uniform(-1.0, 1.0);
    const double im = uniform(-1.0, 1.0);
    if (re * re + im * im <= 1.0) return {re, im};
  }
}

SplitMix64 SplitMix64::split(std::uint64_t label) const noexcept {
  SplitMix64 mixer(state_ ^ (label * 0xD1B54A32D192ED03ULL));
  return SplitMix64(mixer.next());
}

SplitMix64 derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept {
  SplitMix64 stream(seed);
  for (auto label : path) stream = stream.split(label);
  return stream;
}

}  // namespace qstft
