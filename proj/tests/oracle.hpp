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

// Reference implementations for the tests. Everything here works on explicit
// residue tuples with floating-point characters, so it shares no index tables
// or phase arithmetic with the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <set>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Tuple = std::vector<std::int64_t>;

struct Setup {
  std::vector<std::int64_t> n;
  std::vector<Tuple> elements;  // lexicographic
  std::vector<Tuple> H;         // sorted
  std::vector<Tuple> reps;      // sorted coset minima
  double wG = 1.0;
  double wH = 1.0;

  Setup(std::vector<std::int64_t> factors, const std::vector<Tuple>& generators, double w_g = 1.0, double w_h = 1.0)
      : n(std::move(factors)), wG(w_g), wH(w_h) {
    elements = {Tuple{}};
    for (auto m : n) {
      std::vector<Tuple> next;
      for (const auto& prefix : elements) {
        for (std::int64_t r = 0; r < m; ++r) {
          auto t = prefix;
          t.push_back(r);
          next.push_back(t);
        }
      }
      elements = next;
    }
    std::set<Tuple> closure{Tuple(n.size(), 0)};
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<Tuple> add_on;
      for (const auto& h : closure) {
        for (const auto& g : generators) {
          auto s = add(h, g);
          if (!closure.count(s)) add_on.insert(s);
        }
      }
      if (!add_on.empty()) {
        grew = true;
        closure.insert(add_on.begin(), add_on.end());
      }
    }
    H.assign(closure.begin(), closure.end());
    std::set<Tuple> mins;
    for (const auto& x : elements) mins.insert(rep(x));
    reps.assign(mins.begin(), mins.end());
  }

  std::size_t size() const { return elements.size(); }
  std::size_t cosets() const { return reps.size(); }
  double w_dual() const { return 1.0 / (static_cast<double>(size()) * wG); }
  double wQ() const { return wG / wH; }
  double w_grid() const { return w_dual() * wQ(); }

  Tuple add(const Tuple& a, const Tuple& b) const {
    Tuple out(n.size());
    for (std::size_t j = 0; j < n.size(); ++j) out[j] = (a[j] + b[j]) % n[j];
    return out;
  }
  Tuple sub(const Tuple& a, const Tuple& b) const {
    Tuple out(n.size());
    for (std::size_t j = 0; j < n.size(); ++j) out[j] = ((a[j] - b[j]) % n[j] + n[j]) % n[j];
    return out;
  }
  Tuple rep(const Tuple& x) const {
    Tuple best = x;
    for (const auto& h : H) best = std::min(best, add(x, h));
    return best;
  }
  std::size_t index(const Tuple& x) const {
    return static_cast<std::size_t>(std::find(elements.begin(), elements.end(), x) - elements.begin());
  }
  std::size_t coset(const Tuple& x) const {
    const auto r = rep(x);
    return static_cast<std::size_t>(std::find(reps.begin(), reps.end(), r) - reps.begin());
  }
  C chi(const Tuple& k, const Tuple& x) const {
    double turns = 0.0;
    for (std::size_t j = 0; j < n.size(); ++j) turns += static_cast<double>(k[j] * x[j]) / static_cast<double>(n[j]);
    return std::polar(1.0, 2.0 * std::numbers::pi * turns);
  }
  bool in_perp(const Tuple& k) const {
    for (const auto& h : H) {
      if (std::abs(chi(k, h) - 1.0) > 1e-9) return false;
    }
    return true;
  }
};

inline std::vector<C> dft(const Setup& s, const std::vector<C>& f) {
  std::vector<C> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (std::size_t x = 0; x < s.size(); ++x) out[k] += f[x] * std::conj(s.chi(s.elements[k], s.elements[x]));
    out[k] *= s.wG;
  }
  return out;
}

inline std::vector<C> periodize(const Setup& s, const std::vector<C>& f) {
  std::vector<C> out(s.cosets());
  for (std::size_t c = 0; c < s.cosets(); ++c) {
    for (const auto& h : s.H) out[c] += f[s.index(s.add(s.reps[c], h))];
    out[c] *= s.wH;
  }
  return out;
}

// Row-major (omega, coset).
inline std::vector<C> analyze(const Setup& s, const std::vector<C>& f, const std::vector<C>& g) {
  std::vector<C> out(s.size() * s.cosets());
  for (std::size_t w = 0; w < s.size(); ++w) {
    for (std::size_t z = 0; z < s.cosets(); ++z) {
      C acc = 0.0;
      for (std::size_t x = 0; x < s.size(); ++x) {
        const auto& X = s.elements[x];
        acc += f[x] * std::conj(s.chi(s.elements[w], X)) * std::conj(g[s.coset(s.sub(X, s.reps[z]))]);
      }
      out[w * s.cosets() + z] = acc * s.wG;
    }
  }
  return out;
}

inline std::vector<C> synthesize(const Setup& s, const std::vector<C>& F, const std::vector<C>& g) {
  std::vector<C> out(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    const auto& X = s.elements[x];
    for (std::size_t w = 0; w < s.size(); ++w) {
      for (std::size_t z = 0; z < s.cosets(); ++z) {
        out[x] += F[w * s.cosets() + z] * s.chi(s.elements[w], X) * g[s.coset(s.sub(X, s.reps[z]))];
      }
    }
    out[x] *= s.w_grid();
  }
  return out;
}

// Matrix of the two-wavelet multiplier from the weak form:
// P(t, s) w_G = sum sigma D(u delta_s) conj(D(v delta_t)) w_grid.
inline std::vector<std::vector<C>> multiplier(const Setup& s, const std::vector<C>& sigma, const std::vector<C>& u,
                                              const std::vector<C>& v, const std::vector<C>& g) {
  const std::size_t N = s.size();
  std::vector<std::vector<C>> Du(N), Dv(N);
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<C> du(N), dv(N);
    du[j] = u[j];
    dv[j] = v[j];
    Du[j] = analyze(s, du, g);
    Dv[j] = analyze(s, dv, g);
  }
  std::vector<std::vector<C>> P(N, std::vector<C>(N));
  for (std::size_t t = 0; t < N; ++t) {
    for (std::size_t c = 0; c < N; ++c) {
      C acc = 0.0;
      for (std::size_t k = 0; k < sigma.size(); ++k) acc += sigma[k] * Du[c][k] * std::conj(Dv[t][k]);
      P[t][c] = acc * s.w_grid() / s.wG;
    }
  }
  return P;
}

inline double max_abs_diff(const std::vector<C>& a, const std::vector<C>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace oracle
