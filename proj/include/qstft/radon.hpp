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
#include <vector>

#include "qstft/harmonic.hpp"

namespace qstft {

/// A direction d = (a, b) in Z_n^2, not both zero.
struct Direction {
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool operator==(const Direction&) const = default;
};

/// Grayscale image as rows of pixel values; pixel (i, j) sits at element (i, j).
using Image = std::vector<std::vector<double>>;

/// {t d mod n : t} in Z_n x Z_n. Throws zero_direction for d = (0, 0) and
/// invalid_factors for n < 1.
Subgroup line_subgroup(std::int64_t n, Direction d);
/// Context for Z_n^2 and the line through d.
Context line_context(std::int64_t n, Direction d);
/// Every nonzero d in Z_n^2 in lexicographic order.
std::vector<Direction> all_directions(std::int64_t n);

/// Throws mismatch unless the image is n x n.
GroupFunction image_function(const FiniteGroup& plane, const Image& image);

/// Line sums R_H f over the cosets of the line subgroup.
GroupFunction discrete_radon(const Context& ctx, const GroupFunction& f);
/// The quotient-window transform of f for the line subgroup.
TimeFreqFunction directional_dstft(const Context& ctx, const GroupFunction& f, const GroupFunction& window);

/// Reference evaluation of the directional transform as the plain triple sum
///   sum_x f(x) conj(<x, omega>) conj(g(xH - zH))
/// over pixel coordinates, with cosets found by walking the line t d.
/// `window` is indexed in the same coset order as the quotient of line_context(n, d).
TimeFreqFunction directional_dstft_unrolled(std::int64_t n, Direction d, const Image& image,
                                            const std::vector<Complex>& window);

}  // namespace qstft
