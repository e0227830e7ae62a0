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
#include <string>
#include <vector>

#include "qstft/function.hpp"
#include "qstft/rng.hpp"

namespace qstft {

enum class Preset { delta, constant, indicator, random };

std::string to_string(Preset preset);

/// Recipe for one input function. `index` feeds delta, `value` feeds
/// constant, `support` feeds indicator; random draws every value from the
/// closed unit disc.
struct FunctionSpec {
  Preset preset = Preset::random;
  std::size_t index = 0;
  Complex value{1.0, 0.0};
  std::vector<std::size_t> support;
  /// For random: keep only the real part.
  bool real = false;
};

/// Throws invalid_element when a delta index or indicator support point
/// falls outside the space.
GroupFunction make_function(const Space& space, const FunctionSpec& spec, SplitMix64& rng);
GroupFunction random_function(const Space& space, SplitMix64& rng);
GroupFunction random_real_function(const Space& space, SplitMix64& rng);

/// FNV-1a over the bit patterns of every value and the space size and weight.
class Digest {
 public:
  Digest& add(std::uint64_t word);
  Digest& add(double value);
  Digest& add(const GroupFunction& f);
  Digest& add(const std::string& text);
  /// 16 lowercase hex digits.
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace qstft
