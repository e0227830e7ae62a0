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

#include "qstft/corpus.hpp"

#include <bit>
#include <cstdio>

#include "qstft/error.hpp"

namespace qstft {

std::string to_string(Preset preset) {
  switch (preset) {
    case Preset::delta: return "delta";
    case Preset::constant: return "constant";
    case Preset::indicator: return "indicator";
    case Preset::random: return "seeded-random-complex";
  }
  return "unknown";
}

GroupFunction random_function(const Space& space, SplitMix64& rng) {
  std::vector<Complex> values(space.size);
  for (auto& value : values) value = rng.unit_disc();
  return {space, std::move(values)};
}

GroupFunction random_real_function(const Space& space, SplitMix64& rng) {
  std::vector<Complex> values(space.size);
  for (auto& value : values) value = rng.uniform(-1.0, 1.0);
  return {space, std::move(values)};
}

GroupFunction make_function(const Space& space, const FunctionSpec& spec, SplitMix64& rng) {
  switch (spec.preset) {
    case Preset::delta:
      if (spec.index >= space.size) {
        throw Error(Errc::invalid_element, "delta index " + std::to_string(spec.index) + " outside a space of size " +
                                               std::to_string(space.size));
      }
      return GroupFunction::delta(space, spec.index);
    case Preset::constant:
      return GroupFunction::constant(space, spec.value);
    case Preset::indicator:
      for (std::size_t i : spec.support) {
        if (i >= space.size) {
          throw Error(Errc::invalid_element, "indicator index " + std::to_string(i) + " outside a space of size " +
                                                 std::to_string(space.size));
        }
      }
      return GroupFunction::indicator(space, spec.support);
    case Preset::random:
      return spec.real ? random_real_function(space, rng) : random_function(space, rng);
  }
  throw Error(Errc::config, "unknown preset");
}

Digest& Digest::add(std::uint64_t word) {
  for (int byte = 0; byte < 8; ++byte) {
    state_ ^= (word >> (8 * byte)) & 0xFFU;
    state_ *= 0x100000001b3ULL;
  }
  return *this;
}

Digest& Digest::add(double value) { return add(std::bit_cast<std::uint64_t>(value)); }

Digest& Digest::add(const GroupFunction& f) {
  add(static_cast<std::uint64_t>(f.size()));
  add(f.weight());
  for (const Complex& z : f.values()) {
    add(z.real());
    add(z.imag());
  }
  return *this;
}

Digest& Digest::add(const std::string& text) {
  add(static_cast<std::uint64_t>(text.size()));
  for (unsigned char c : text) {
    state_ ^= c;
    state_ *= 0x100000001b3ULL;
  }
  return *this;
}

std::string Digest::hex() const {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(state_));
  return buffer;
}

}  // namespace qstft
