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

namespace qstft {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_factors: return "invalid-factors";
    case Errc::invalid_element: return "invalid-element";
    case Errc::mismatch: return "mismatch";
    case Errc::non_invertible_window_pair: return "non-invertible-window-pair";
    case Errc::degenerate_window: return "degenerate-window";
    case Errc::invalid_exponent: return "invalid-exponent";
    case Errc::unsupported_exponent: return "unsupported-exponent";
    case Errc::range: return "range";
    case Errc::invalid_region: return "invalid-region";
    case Errc::zero_direction: return "zero-direction";
    case Errc::config: return "config";
    case Errc::io: return "io";
  }
  return "unknown";
}

}  // namespace qstft
