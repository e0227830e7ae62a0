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

#include "qstft/radon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "qstft/dstft.hpp"
#include "qstft/error.hpp"

namespace qstft {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

}  // namespace

Subgroup line_subgroup(std::int64_t n, Direction d) {
  if (n < 1) throw Error(Errc::invalid_factors, "line_subgroup: n must be positive");
  if (mod(d.a, n) == 0 && mod(d.b, n) == 0) throw Error(Errc::zero_direction, "direction reduces to (0, 0)");
  const FiniteGroup plane = build_group({n, n});
  return generate_subgroup(plane, {{mod(d.a, n), mod(d.b, n)}});
}

Context line_context(std::int64_t n, Direction d) { return Context(build_group({n, n}), line_subgroup(n, d)); }

std::vector<Direction> all_directions(std::int64_t n) {
  std::vector<Direction> out;
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      if (a != 0 || b != 0) out.push_back({a, b});
    }
  }
  return out;
}

GroupFunction image_function(const FiniteGroup& plane, const Image& image) {
  if (plane.rank() != 2 || plane.factors()[0] != plane.factors()[1]) {
    throw Error(Errc::mismatch, "image_function: group is not Z_n x Z_n");
  }
  const auto n = static_cast<std::size_t>(plane.factors()[0]);
  if (image.size() != n) throw Error(Errc::mismatch, "image must have " + std::to_string(n) + " rows");
  std::vector<Complex> values;
  values.reserve(n * n);
  for (const auto& row : image) {
    if (row.size() != n) throw Error(Errc::mismatch, "image rows must have " + std::to_string(n) + " pixels");
    for (double pixel : row) values.emplace_back(pixel, 0.0);
  }
  return {group_space(plane), std::move(values)};
}

GroupFunction discrete_radon(const Context& ctx, const GroupFunction& f) { return periodize(ctx.quotient(), f); }

TimeFreqFunction directional_dstft(const Context& ctx, const GroupFunction& f, const GroupFunction& window) {
  return analyze(ctx, f, window);
}

TimeFreqFunction directional_dstft_unrolled(std::int64_t n, Direction d, const Image& image,
                                            const std::vector<Complex>& window) {
  if (mod(d.a, n) == 0 && mod(d.b, n) == 0) throw Error(Errc::zero_direction, "direction reduces to (0, 0)");
  using Pixel = std::pair<std::int64_t, std::int64_t>;
  auto representative = [&](Pixel x) {
    Pixel best = x;
    for (std::int64_t t = 1; t < n; ++t) best = std::min(best, Pixel{mod(x.first + t * d.a, n), mod(x.second + t * d.b, n)});
    return best;
  };
  std::map<Pixel, std::size_t> coset_number;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) coset_number.emplace(representative({i, j}), 0);
  }
  std::vector<Pixel> reps;
  for (auto& [rep, number] : coset_number) {
    number = reps.size();
    reps.push_back(rep);
  }
  if (window.size() != reps.size()) throw Error(Errc::mismatch, "window size does not match the number of lines");

  const auto nn = static_cast<std::size_t>(n);
  const std::size_t cosets = reps.size();
  TimeFreqFunction out(nn * nn, cosets, Weight{1, n * n});
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::int64_t w1 = 0; w1 < n; ++w1) {
    for (std::int64_t w2 = 0; w2 < n; ++w2) {
      const auto row = static_cast<std::size_t>(w1 * n + w2);
      for (std::size_t z = 0; z < cosets; ++z) {
        Complex sum = 0.0;
        for (std::int64_t i = 0; i < n; ++i) {
          for (std::int64_t j = 0; j < n; ++j) {
            const Pixel shifted = representative({mod(i - reps[z].first, n), mod(j - reps[z].second, n)});
            const double phase = step * static_cast<double>(mod(w1 * i + w2 * j, n));
            const Complex chi = std::polar(1.0, phase);
            sum += image[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * std::conj(chi) *
                   std::conj(window[coset_number.at(shifted)]);
          }
        }
        out(row, z) = sum;
      }
    }
  }
  return out;
}

}  // namespace qstft
