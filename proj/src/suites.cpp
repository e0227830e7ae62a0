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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <tuple>

#include "qstft/bounds.hpp"
#include "qstft/dstft.hpp"
#include "qstft/error.hpp"
#include "qstft/lps.hpp"
#include "qstft/radon.hpp"
#include "qstft/report.hpp"
#include "qstft/spectral.hpp"

namespace qstft {

namespace {

// Labels for child streams; every random input of a case comes from
// root.split(label) so adding a check never shifts another check's draws.
enum Role : std::uint64_t {
  kF1 = 1,
  kF2,
  kG1,
  kG2,
  kU,
  kV,
  kSigma,
  kSigma2,
  kGrid,
  kWindowOnG,
  kRegions,
  kImage,
  kScalars,
  kExponents = 100,
};

double sup(std::span<const Complex> values) {
  double m = 0.0;
  for (const auto& z : values) m = std::max(m, std::abs(z));
  return m;
}

class Recorder {
 public:
  Recorder(const SuiteConfig& config, Suite suite, std::vector<Record>& out) : config_(config), suite_(suite), out_(out) {}

  void at(std::size_t group, std::string label, std::size_t case_index) {
    group_ = group;
    label_ = std::move(label);
    case_ = case_index;
    digest_.clear();
  }
  void digest(std::string value) { digest_ = std::move(value); }
  const SuiteConfig& config() const noexcept { return config_; }

  Record& base(const std::string& check, const std::string& anchor) {
    Record r;
    r.suite = suite_;
    r.group = group_;
    r.group_label = label_;
    r.case_index = case_;
    r.check = check;
    r.anchor = anchor;
    r.digest = digest_;
    out_.push_back(std::move(r));
    return out_.back();
  }

  Record& equal(const std::string& check, const std::string& anchor, double lhs, double rhs, double residual,
                const std::string& tolerance_key) {
    Record& r = base(check, anchor);
    r.kind = CheckKind::equality;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = residual;
    r.tolerance = config_.tolerance(tolerance_key);
    r.pass = std::isfinite(residual) && residual <= r.tolerance;
    return r;
  }

  Record& equal(const std::string& check, const std::string& anchor, Complex lhs, Complex rhs,
                const std::string& tolerance_key) {
    return equal(check, anchor, std::abs(lhs), std::abs(rhs), relative_difference(lhs, rhs), tolerance_key);
  }

  Record& equal(const std::string& check, const std::string& anchor, std::span<const Complex> lhs,
                std::span<const Complex> rhs, const std::string& tolerance_key) {
    return equal(check, anchor, sup(lhs), sup(rhs), relative_difference(lhs, rhs), tolerance_key);
  }

  Record& bound(const std::string& check, const std::string& anchor, double lhs, double rhs) {
    Record& r = base(check, anchor);
    r.kind = CheckKind::bound;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = lhs - rhs;
    r.tolerance = 1e-9;
    r.pass = std::isfinite(lhs) && std::isfinite(rhs) && bound_holds(lhs, rhs);
    return r;
  }

  Record& bound(const BoundReport& report) {
    Record& r = bound(std::string(to_string(report.theorem)), std::string(to_string(report.theorem)),
                      report.computed_lhs, report.stated_rhs);
    r.pass = report.pass;
    r.residual = -report.slack;
    r.details = report.constants;
    r.details["lhs_exact"] = report.lhs_exact ? 1.0 : 0.0;
    r.details["slack"] = report.slack;
    for (const auto& [name, value] : report.extra_rhs) r.details["rhs_" + name] = value;
    return r;
  }

  void expect_error(const std::string& check, const std::string& anchor, Errc expected,
                    const std::function<void()>& body) {
    Record& r = base(check, anchor);
    r.kind = CheckKind::expect;
    try {
      body();
      r.error = "no error raised";
    } catch (const Error& e) {
      r.pass = e.code() == expected;
      if (!r.pass) r.error = e.what();
    }
  }

  // Runs one case; an escaping library error becomes a failed record.
  void guarded(const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      Record& r = base("error", "module-error");
      r.error = e.what();
    }
  }

 private:
  const SuiteConfig& config_;
  Suite suite_;
  std::vector<Record>& out_;
  std::size_t group_ = 0;
  std::string label_;
  std::size_t case_ = 0;
  std::string digest_;
};

SplitMix64 case_stream(const SuiteConfig& config, Suite suite, std::size_t group, std::size_t case_index) {
  return derive_stream(config.seed, {static_cast<std::uint64_t>(suite) + 1, group, case_index});
}

TimeFreqFunction grid_function(const Context& ctx, const FunctionSpec& spec, SplitMix64 rng) {
  return {ctx.dual().order(), ctx.quotient().size(), make_function(ctx.grid_space(), spec, rng)};
}

MultiplierSpec make_spec(const Context& ctx, const InputConfig& inputs, const SplitMix64& root) {
  SplitMix64 su = root.split(kU), sv = root.split(kV), sg = root.split(kG1);
  return {grid_function(ctx, inputs.sigma, root.split(kSigma)), make_function(ctx.group_space(), inputs.u, su),
          make_function(ctx.group_space(), inputs.v, sv), make_function(ctx.quotient_space(), inputs.g, sg)};
}

std::string spec_digest(const MultiplierSpec& spec) {
  return Digest().add(spec.sigma.flat()).add(spec.u).add(spec.v).add(spec.g).hex();
}

double to_exponent(double reciprocal) { return reciprocal <= 0.0 ? kInf : 1.0 / reciprocal; }

Exponents sample_exponents(Theorem theorem, std::size_t case_index, SplitMix64 rng) {
  Exponents e;
  if (uses_symbol_exponent(theorem)) {
    const bool open_top = theorem == Theorem::lp_holder;
    switch (case_index % 4) {
      case 0: e.r = 1.0; break;
      case 1: e.r = open_top ? 1.5 : 2.0; break;
      default: e.r = 1.0 / (1.0 - 0.5 * (open_top ? rng.uniform() : 1.0 - rng.uniform()));
    }
    if (!open_top && case_index % 4 >= 2) e.r = 1.0 / (0.5 + 0.5 * rng.uniform());
    e.r = std::clamp(e.r, 1.0, open_top ? 1.999 : 2.0);
    const double rc = conjugate_exponent(e.r);
    switch (case_index % 3) {
      case 0: e.p = e.r; break;
      case 1: e.p = rc; break;
      default: {
        const double lo = 1.0 / rc, hi = 1.0 / e.r;
        e.p = std::clamp(to_exponent(lo + (hi - lo) * rng.uniform()), e.r, rc);
      }
    }
  } else if (uses_operator_exponent(theorem)) {
    switch (case_index % 5) {
      case 0: e.p = 1.0; break;
      case 1: e.p = 2.0; break;
      case 2: e.p = kInf; break;
      default: e.p = std::max(1.0, to_exponent(rng.uniform()));
    }
  }
  return e;
}

double matrix_gap(const OperatorMatrix& a, const OperatorMatrix& b) { return schatten_norm(a.minus(b), kInf); }

// --- suites ---------------------------------------------------------------

void run_weil(Recorder& rec, const Context& ctx, const SplitMix64& root) {
  SplitMix64 rf = root.split(kF1);
  const auto f = random_function(ctx.group_space(), rf);
  rec.digest(Digest().add(f).hex());
  Complex over_group{};
  for (const auto& z : f.values()) over_group += z;
  over_group *= f.weight();
  const auto fibers = periodize(ctx.quotient(), f);
  Complex over_quotient{};
  for (const auto& z : fibers.values()) over_quotient += z;
  over_quotient *= fibers.weight();
  rec.equal("weil_formula", "weil-formula", over_group, over_quotient, "weil");
}

void run_slice(Recorder& rec, const Context& ctx, const SplitMix64& root) {
  SplitMix64 rf = root.split(kF1);
  const auto f = random_function(ctx.group_space(), rf);
  rec.digest(Digest().add(f).hex());
  const auto spectrum = fourier(ctx.group(), f);
  const auto sliced = fourier(ctx, periodize(ctx.quotient(), f));
  std::vector<Complex> restricted;
  for (auto k : ctx.annihilator().elements()) restricted.push_back(spectrum[k]);
  rec.equal("fourier_slice", "fourier-slice", sliced.values(), restricted, "slice");

  const auto fq = periodize(ctx.quotient(), f);
  rec.equal("plancherel_quotient", "plancherel/quotient", fq.norm(2.0), fourier(ctx, fq).norm(2.0),
            relative_difference(fq.norm(2.0), fourier(ctx, fq).norm(2.0)), "fourier");
  rec.equal("quotient_roundtrip", "fourier-inverse/quotient", inverse_fourier(ctx, fourier(ctx, fq)).values(),
            fq.values(), "fourier");
}

void run_stft(Recorder& rec, const Context& ctx, const SplitMix64& root) {
  const auto& G = ctx.group();
  SplitMix64 rf = root.split(kF1), rw = root.split(kWindowOnG), rs = root.split(kScalars);
  const auto f = random_function(ctx.group_space(), rf);
  const auto w = random_function(ctx.group_space(), rw);
  rec.digest(Digest().add(f).add(w).hex());

  const auto V = stft(G, f, w);
  const double lhs = std::pow(V.norm(2.0), 2);
  const double rhs = std::pow(w.norm(2.0), 2) * std::pow(f.norm(2.0), 2);
  rec.equal("stft_norm", "stft-norm-identity", lhs, rhs, relative_difference(lhs, rhs), "stft");

  const auto F = fourier(G, f);
  rec.equal("plancherel", "plancherel/group", F.norm(2.0), f.norm(2.0), relative_difference(F.norm(2.0), f.norm(2.0)),
            "fourier");
  rec.equal("fourier_roundtrip", "fourier-inverse/group", inverse_fourier(G, F).values(), f.values(), "fourier");
  rec.equal("separable_path", "fourier-fast-path", fourier(G, f, FourierPath::separable).values(), F.values(),
            "fourier");
  const auto omega = static_cast<std::size_t>(rs.below(G.order()));
  rec.equal("modulation_shift", "modulation-translation", fourier(G, modulate(G, f, omega)).values(),
            translate(G, F, omega).values(), "fourier");
}

void run_dstft(Recorder& rec, const Context& ctx, const SplitMix64& root) {
  SplitMix64 r1 = root.split(kF1), r2 = root.split(kF2), rg1 = root.split(kG1), rg2 = root.split(kG2),
             rgrid = root.split(kGrid), rs = root.split(kScalars);
  const auto f1 = random_function(ctx.group_space(), r1);
  const auto f2 = random_function(ctx.group_space(), r2);
  const auto g1 = random_function(ctx.quotient_space(), rg1);
  const auto g2 = random_function(ctx.quotient_space(), rg2);
  const auto F = random_function(ctx.grid_space(), rgrid);
  rec.digest(Digest().add(f1).add(f2).add(g1).add(g2).add(F).hex());

  const auto D11 = analyze(ctx, f1, g1);
  const auto D22 = analyze(ctx, f2, g2);
  rec.equal("orthogonality_bilinear", "orthogonality/bilinear", D11.inner(D22), f1.inner(f2) * g2.inner(g1),
            "orthogonality");
  const double lhs = D11.norm(2.0), rhs = g1.norm(2.0) * f1.norm(2.0);
  rec.equal("orthogonality_norm", "orthogonality/norm", lhs, rhs, relative_difference(lhs, rhs), "orthogonality");

  rec.equal("quotient_form", "three-forms/quotient-convolution", analyze_quotient_form(ctx, f1, g1).flat().values(),
            D11.flat().values(), "three_forms");
  rec.equal("fourier_form", "three-forms/fourier-side", analyze_fourier_form(ctx, f1, g1).flat().values(),
            D11.flat().values(), "three_forms");

  const TimeFreqFunction coefficients(ctx.dual().order(), ctx.quotient().size(), F);
  rec.equal("synthesis_adjoint", "synthesis-adjoint", D11.inner(coefficients),
            f1.inner(synthesize(ctx, coefficients, g1)), "orthogonality");

  rec.bound("sup_bound", "sup-bound", D11.norm(kInf), g1.norm(kInf) * f1.norm(1.0));
  for (double p : {2.0, 3.0, 4.0, kInf}) {
    const std::string tag = std::isinf(p) ? "inf" : std::to_string(static_cast<int>(p));
    rec.bound("lp_bound_p" + tag, "lp-bound", D11.norm(p), g1.norm(p) * f1.norm(conjugate_exponent(p)))
        .details["p"] = p;
  }

  const auto omega = static_cast<std::size_t>(rs.below(ctx.dual().order()));
  const auto coset = static_cast<std::size_t>(rs.below(ctx.quotient().size()));
  const double atom_norm = atom(ctx, g1, omega, coset).norm(2.0);
  const double expected = std::sqrt(static_cast<double>(ctx.subgroup().size()) * ctx.subgroup().weight()) * g1.norm(2.0);
  rec.equal("atom_norm", "atom-norm", atom_norm, expected, relative_difference(atom_norm, expected), "orthogonality");
}

void run_inversion(Recorder& rec, const Context& ctx, const SplitMix64& root) {
  SplitMix64 rf = root.split(kF1), rg1 = root.split(kG1), rg2 = root.split(kG2);
  const auto f = random_function(ctx.group_space(), rf);
  const auto g1 = random_function(ctx.quotient_space(), rg1);
  const auto g2 = random_function(ctx.quotient_space(), rg2);
  rec.digest(Digest().add(f).add(g1).add(g2).hex());

  rec.equal("two_window_roundtrip", "inversion/two-window", reconstruct(ctx, f, g1, g2).values(), f.values(),
            "inversion");
  rec.equal("left_inverse_roundtrip", "inversion/left-inverse", left_inverse(ctx, analyze(ctx, f, g1), g1).values(),
            f.values(), "inversion");

  const auto sigma = TimeFreqFunction(ctx.dual().order(), ctx.quotient().size(),
                                      GroupFunction::constant(ctx.grid_space(), 1.0));
  const auto M = generalized_multiplier_matrix(ctx, sigma, g1);
  const auto I = OperatorMatrix::identity(ctx.group_space());
  rec.equal("identity_multiplier", "inversion/identity-multiplier", schatten_norm(M, kInf), 1.0, matrix_gap(M, I),
            "inversion");

  // g2 minus its projection onto g1 is orthogonal to g1.
  const auto orthogonal = g2.minus(g1.scaled(g2.inner(g1) / g1.inner(g1)));
  rec.expect_error("orthogonal_pair_rejected", "inversion/precondition", Errc::non_invertible_window_pair,
                   [&] { (void)reconstruct(ctx, f, g1, orthogonal); });
}

void run_multiplier(Recorder& rec, const Context& ctx, const SplitMix64& root) {
  const InputConfig& inputs = rec.config().inputs;
  const auto spec = make_spec(ctx, inputs, root);
  SplitMix64 rf = root.split(kF1), rh = root.split(kF2), rs = root.split(kScalars);
  const auto f = random_function(ctx.group_space(), rf);
  const auto h = random_function(ctx.group_space(), rh);
  rec.digest(Digest().add(spec_digest(spec)).add(f).add(h).hex());

  const auto P = two_wavelet_matrix(ctx, spec);
  const double norm = schatten_norm(P, kInf);
  const MultiplierSpec swapped{spec.sigma.conj(), spec.v, spec.u, spec.g};
  const double gap = matrix_gap(P.adjoint(), two_wavelet_matrix(ctx, swapped));
  rec.equal("adjoint_identity", "multiplier/adjoint", gap, 0.0, norm > 0.0 ? gap / norm : gap, "adjoint")
      .details["operator_norm"] = norm;

  const auto Pf = apply_two_wavelet(ctx, spec, f);
  rec.equal("weak_form", "multiplier/weak-form", Pf.inner(h), two_wavelet_form(ctx, spec, f, h), "multiplier");
  rec.equal("matrix_apply", "multiplier/matrix", P.apply(f).values(), Pf.values(), "multiplier");
  rec.equal("kernel_path", "multiplier/kernel", kernel_matrix(ctx, spec).apply(f).values(), Pf.values(), "multiplier");

  const double g2 = spec.g.norm(2.0);
  const auto M = apply_generalized_multiplier(ctx, spec.sigma, spec.g, spec.u.times(f));
  rec.equal("generalized_relation", "multiplier/generalized-relation", Pf.inner(h),
            g2 * g2 * spec.v.conj().times(M).inner(h), "multiplier");

  const Complex a = rs.unit_disc(), b = rs.unit_disc();
  const auto sigma2 = grid_function(ctx, FunctionSpec{}, root.split(kSigma2));
  MultiplierSpec combined = spec;
  combined.sigma = TimeFreqFunction(spec.sigma.rows(), spec.sigma.cols(),
                                    spec.sigma.flat().scaled(a).plus(sigma2.flat().scaled(b)));
  MultiplierSpec second = spec;
  second.sigma = sigma2;
  const auto lhs = two_wavelet_matrix(ctx, combined);
  const auto rhs = P.scaled(a).plus(two_wavelet_matrix(ctx, second).scaled(b));
  const double scale = std::max(schatten_norm(lhs, kInf), schatten_norm(rhs, kInf));
  const double lin_gap = matrix_gap(lhs, rhs);
  rec.equal("sigma_linearity", "multiplier/linearity", lin_gap, 0.0, scale > 0.0 ? lin_gap / scale : lin_gap,
            "multiplier");

  MultiplierSpec flat = spec;
  flat.sigma = TimeFreqFunction(spec.sigma.rows(), spec.sigma.cols(), GroupFunction::constant(ctx.grid_space(), 1.0));
  rec.equal("unit_symbol_collapse", "multiplier/unit-symbol", apply_two_wavelet(ctx, flat, f).values(),
            spec.v.conj().times(spec.u).times(f).scaled(g2 * g2).values(), "multiplier");
}

void run_bounds(Recorder& rec, const Context& ctx, std::size_t case_index, const SplitMix64& root,
                std::initializer_list<Theorem> theorems) {
  const auto spec = make_spec(ctx, rec.config().inputs, root);
  rec.digest(spec_digest(spec));
  for (Theorem theorem : theorems) {
    const auto exponents = sample_exponents(theorem, case_index, root.split(kExponents + static_cast<std::uint64_t>(theorem)));
    const BoundOptions options{rec.config().trials, root.split(kExponents).next()};
    rec.bound(bound_report(theorem, ctx, spec, exponents, options));
  }
}

void run_schur(Recorder& rec, const Context& ctx, std::size_t case_index, const SplitMix64& root) {
  run_bounds(rec, ctx, case_index, root, {Theorem::lp_schur});
  const auto spec = make_spec(ctx, rec.config().inputs, root);
  const auto N = schur_kernel(ctx, spec);
  const double w = ctx.group().weight();
  const double column = (N.cwiseAbs().colwise().sum() * w).maxCoeff();
  const double row = (N.cwiseAbs().rowwise().sum() * w).maxCoeff();
  const double g_inf = spec.g.norm(kInf), sigma_1 = spec.sigma.norm(1.0);
  rec.bound("kernel_column_sum", "schur/column-sum", column,
            spec.u.norm(kInf) * spec.v.norm(1.0) * g_inf * g_inf * sigma_1);
  rec.bound("kernel_row_sum", "schur/row-sum", row, spec.u.norm(1.0) * spec.v.norm(kInf) * g_inf * g_inf * sigma_1);
}

void run_trace(Recorder& rec, const Context& ctx, const SplitMix64& root) {
  const auto spec = make_spec(ctx, rec.config().inputs, root);
  SplitMix64 ru = root.split(kF1), rv = root.split(kF2), rsig = root.split(kSigma2);
  MultiplierSpec real = spec;
  real.u = random_real_function(ctx.group_space(), ru);
  real.v = random_real_function(ctx.group_space(), rv);
  MultiplierSpec normal = spec;
  normal.v = spec.u;
  normal.sigma = TimeFreqFunction(spec.sigma.rows(), spec.sigma.cols(), random_real_function(ctx.grid_space(), rsig));
  rec.digest(Digest().add(spec_digest(spec)).add(real.u).add(real.v).add(normal.sigma.flat()).hex());

  rec.equal("trace_formula", "trace-formula", trace(two_wavelet_matrix(ctx, spec)), trace_formula(ctx, spec), "trace");
  rec.equal("trace_formula_real_windows", "trace-formula/real-windows", trace(two_wavelet_matrix(ctx, real)),
            trace_formula_swapped(ctx, real), "trace");
  const auto P = two_wavelet_matrix(ctx, normal);
  rec.equal("trace_eigenvalue_sum", "trace/eigenvalues", trace(P), eigenvalues(P).sum(), "eigen_trace");
}

LocalizationRegions random_regions(const Context& ctx, SplitMix64 rng) {
  auto draw = [&](std::size_t n) {
    std::vector<std::size_t> out{0};
    for (std::size_t i = 1; i < n; ++i) {
      if (rng.below(2) == 1) out.push_back(i);
    }
    return out;
  };
  LocalizationRegions regions;
  regions.C1 = draw(ctx.group().order());
  regions.C2 = draw(ctx.group().order());
  regions.D = draw(ctx.quotient().size());
  regions.Omega = draw(ctx.dual().order());
  return regions;
}

void run_lps(Recorder& rec, const Context& ctx, const LocalizationRegions& regions, const SplitMix64& root) {
  SplitMix64 rg = root.split(kG1);
  const auto g = make_function(ctx.quotient_space(), rec.config().inputs.g, rg);
  Digest digest;
  digest.add(g);
  for (const auto* set : {&regions.C1, &regions.C2, &regions.D, &regions.Omega}) {
    digest.add(static_cast<std::uint64_t>(set->size()));
    for (auto i : *set) digest.add(static_cast<std::uint64_t>(i));
  }
  rec.digest(digest.hex());

  auto projection = [&](const std::string& name, const OperatorMatrix& P) {
    rec.equal(name + "_idempotent", "projection/idempotent", 0.0, 0.0, matrix_gap(P.compose(P), P), "projection");
    rec.equal(name + "_self_adjoint", "projection/self-adjoint", 0.0, 0.0, matrix_gap(P.adjoint(), P), "projection");
  };
  projection("p_c1", p_matrix(ctx, regions.C1, g));
  projection("p_c2", p_matrix(ctx, regions.C2, g));
  projection("q", q_matrix(ctx, regions.D, regions.Omega));

  const auto report = equivalence_check(ctx, regions, g);
  const double scale = std::max(report.lps_norm, report.multiplier_norm);
  auto rel = [&](double r) { return scale > 0.0 ? r / scale : r; };
  rec.equal("equivalence_full", "lps/unitary-equivalence", report.lps_norm, report.multiplier_norm,
            rel(report.residual_full), "equivalence");
  rec.equal("equivalence_range", "lps/unitary-equivalence", report.lps_norm, report.multiplier_norm,
            rel(report.residual_range), "equivalence");

  const double counted =
      std::sqrt(static_cast<double>(regions.C1.size() * regions.C2.size())) * ctx.group().weight();
  Record& alpha = rec.equal("alpha", "lps/alpha", report.alpha, counted, relative_difference(report.alpha, counted),
                            "equivalence");
  alpha.details["count_c1"] = static_cast<double>(regions.C1.size());
  alpha.details["count_c2"] = static_cast<double>(regions.C2.size());

  const auto spec = lps_multiplier_spec(ctx, regions, g);
  rec.equal("unit_u", "lps/unit-windows", spec.u.norm(2.0), 1.0, relative_difference(spec.u.norm(2.0), 1.0),
            "projection");
  rec.equal("unit_v", "lps/unit-windows", spec.v.norm(2.0), 1.0, relative_difference(spec.v.norm(2.0), 1.0),
            "projection");

  const auto lambda = eigenvalues(lps_operator(ctx, regions, g));
  const double radius = lambda.size() ? lambda.cwiseAbs().maxCoeff() : 0.0;
  rec.bound("eigenvalue_radius", "lps/spectrum", radius, 1.0 + 1e-9);
}

Image random_image(std::int64_t n, SplitMix64 rng) {
  Image image(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (auto& row : image) {
    for (auto& pixel : row) pixel = rng.uniform();
  }
  return image;
}

void run_radon(Recorder& rec, std::int64_t n, const Image& image, Direction d, const SplitMix64& root) {
  const Context ctx = line_context(n, d);
  const auto f = image_function(ctx.group(), image);
  SplitMix64 rg = root.split(kG1);
  const auto g = random_function(ctx.quotient_space(), rg);
  rec.digest(Digest().add(f).add(g).hex());

  const auto D = directional_dstft(ctx, f, g);
  const auto oracle = directional_dstft_unrolled(n, d, image, std::vector<Complex>(g.values().begin(), g.values().end()));
  rec.equal("analyze_vs_unrolled", "radon/directional-transform", D.flat().values(), oracle.flat().values(),
            "radon_oracle");

  // Line sums by walking each line from its representative.
  const auto radon = discrete_radon(ctx, f);
  std::vector<Complex> sums(ctx.quotient().size());
  for (std::size_t c = 0; c < sums.size(); ++c) {
    const auto rep = ctx.group().element(ctx.quotient().representative(c));
    std::vector<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::int64_t t = 0; t < n; ++t) {
      std::pair<std::int64_t, std::int64_t> x{((rep[0] + t * d.a) % n + n) % n, ((rep[1] + t * d.b) % n + n) % n};
      if (std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
      seen.push_back(x);
      sums[c] += image[static_cast<std::size_t>(x.first)][static_cast<std::size_t>(x.second)];
    }
  }
  rec.equal("line_sums", "radon/line-sums", radon.values(), sums, "radon_oracle");
  rec.equal("roundtrip", "radon/reconstruction", reconstruct(ctx, f, g, g).values(), f.values(), "radon_roundtrip");
  // |<d>| = n / gcd(a, b, n).
  const auto expected = static_cast<double>(n / std::gcd(std::gcd(d.a, d.b), n));
  const auto order = static_cast<double>(ctx.subgroup().size());
  Record& line = rec.equal("line_order", "radon/line-order", order, expected, relative_difference(order, expected),
                           "radon_oracle");
  line.details = {{"d_a", static_cast<double>(d.a)}, {"d_b", static_cast<double>(d.b)}};
}

}  // namespace

std::vector<Record> run_one(const SuiteConfig& config, Suite suite) {
  std::vector<Record> out;
  Recorder rec(config, suite, out);
  if (suite == Suite::radon) {
    for (std::size_t i = 0; i < config.radon.sizes.size(); ++i) {
      const auto n = config.radon.sizes[i];
      const auto base = case_stream(config, suite, i, 0);
      const bool given = config.radon.image && config.radon.image->size() == static_cast<std::size_t>(n);
      const Image image = given ? *config.radon.image : random_image(n, base.split(kImage));
      const auto directions = all_directions(n);
      for (std::size_t k = 0; k < directions.size(); ++k) {
        rec.at(i, "Z" + std::to_string(n) + "xZ" + std::to_string(n), k);
        rec.guarded([&] { run_radon(rec, n, image, directions[k], case_stream(config, suite, i, k + 1)); });
      }
    }
    return out;
  }
  for (std::size_t gi = 0; gi < config.groups.size(); ++gi) {
    const auto& group = config.groups[gi];
    const Context& ctx = *group.context;
    if (suite == Suite::lps) {
      std::vector<LocalizationRegions> cases{LocalizationRegions::full(ctx)};
      if (group.regions) cases.push_back(*group.regions);
      for (std::size_t k = 0; k < config.cases; ++k) {
        cases.push_back(random_regions(ctx, case_stream(config, suite, gi, k).split(kRegions)));
      }
      for (std::size_t k = 0; k < cases.size(); ++k) {
        rec.at(gi, group.label, k);
        rec.guarded([&] { run_lps(rec, ctx, cases[k], case_stream(config, suite, gi, 1000 + k)); });
      }
      continue;
    }
    for (std::size_t k = 0; k < config.cases; ++k) {
      rec.at(gi, group.label, k);
      const auto root = case_stream(config, suite, gi, k);
      rec.guarded([&] {
        switch (suite) {
          case Suite::weil: run_weil(rec, ctx, root); break;
          case Suite::slice: run_slice(rec, ctx, root); break;
          case Suite::stft: run_stft(rec, ctx, root); break;
          case Suite::dstft_ortho: run_dstft(rec, ctx, root); break;
          case Suite::inversion: run_inversion(rec, ctx, root); break;
          case Suite::multiplier: run_multiplier(rec, ctx, root); break;
          case Suite::schatten:
            run_bounds(rec, ctx, k, root,
                       {Theorem::schatten_inf_l1_symbol, Theorem::schatten_inf_linf_symbol,
                        Theorem::schatten_inf_lp_symbol, Theorem::schatten_2_l1_symbol, Theorem::schatten_1_l1_symbol,
                        Theorem::schatten_p_lp_symbol});
            break;
          case Suite::lp_bounds:
            run_bounds(rec, ctx, k, root,
                       {Theorem::lp_l1_endpoint, Theorem::lp_linf_endpoint, Theorem::lp_endpoint_interpolation,
                        Theorem::lp_riesz_duality, Theorem::lp_multilinear, Theorem::lp_holder});
            break;
          case Suite::schur: run_schur(rec, ctx, k, root); break;
          case Suite::trace: run_trace(rec, ctx, root); break;
          case Suite::lps:
          case Suite::radon: break;
        }
      });
    }
  }
  return out;
}

Report run_suite(const SuiteConfig& config) {
  Report report;
  report.config = config_echo(config);
  std::vector<Suite> order = config.suites;
  std::sort(order.begin(), order.end());
  for (Suite suite : order) {
    auto records = run_one(config, suite);
    report.records.insert(report.records.end(), std::make_move_iterator(records.begin()),
                          std::make_move_iterator(records.end()));
  }
  std::stable_sort(report.records.begin(), report.records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.suite, a.group, a.case_index) < std::tie(b.suite, b.group, b.case_index);
  });
  return report;
}

}  // namespace qstft
