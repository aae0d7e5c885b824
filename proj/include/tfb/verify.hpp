#pragma once

#include <string>
#include <vector>

#include "tfb/cohen.hpp"
#include "tfb/quantization.hpp"
#include "tfb/sharpness.hpp"

namespace tfb {
namespace verify {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

inline CheckResult check(const std::string& name, double measured, double tolerance,
                         std::string detail = "") {
  return CheckResult{name, measured, tolerance, measured <= tolerance, std::move(detail)};
}

inline bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

namespace detail_v {

inline SampledSignal atom_signal(double lambda, double x0, double xi0, const AxisGrid& g,
                                 cplx coef = cplx{1.0, 0.0}) {
  return sample_atoms({GaussianAtom{coef, lambda, x0, xi0}}, g);
}

inline std::vector<std::pair<SampledSignal, SampledSignal>> moyal_pairs(const AxisGrid& g) {
  std::vector<std::pair<SampledSignal, SampledSignal>> pairs;
  auto phi = gaussian(1.0, g);
  pairs.emplace_back(phi, phi);
  pairs.emplace_back(phi, gaussian(2.0, g));
  pairs.emplace_back(gaussian(0.5, g), gaussian(4.0, g));
  pairs.emplace_back(phi, atom_signal(1.0, 1.0, 2.0, g));
  pairs.emplace_back(atom_signal(1.0, -2.0, 1.0, g), gaussian(2.0, g));
  pairs.emplace_back(atom_signal(3.0, 2.0, 0.0, g), atom_signal(3.0, -1.0, 0.0, g));
  pairs.emplace_back(atom_signal(0.25, 0.0, -1.0, g), phi);
  pairs.emplace_back(atom_signal(2.0, 1.0, 1.0, g), atom_signal(0.5, -1.0, -1.0, g));
  pairs.emplace_back(gaussian(4.0, g), gaussian(4.0, g));
  pairs.emplace_back(atom_signal(1.0, 0.0, 3.0, g), atom_signal(1.0, 3.0, 0.0, g));
  return pairs;
}

} // namespace detail_v

// ||W(f1,f2)||_{L2} = ||f1|| ||f2|| across ten Gaussian-family pairs.
inline std::vector<CheckResult> suite_moyal(const AxisGrid& g = default_grid()) {
  std::vector<CheckResult> out;
  int k = 0;
  for (const auto& [f1, f2] : detail_v::moyal_pairs(g)) {
    double lhs = l2_norm(cross_wigner(f1, f2));
    double rhs = l2_norm(f1) * l2_norm(f2);
    out.push_back(check("moyal.pair" + std::to_string(k++), std::abs(lhs - rhs) / rhs, 1e-7));
  }
  return out;
}

// Eq. (2.4)/(2.5): FFT cross-Wigner of (phi, phi_lambda) against the closed form.
inline std::vector<CheckResult> suite_wigner_gaussian(const AxisGrid& g = default_grid()) {
  std::vector<CheckResult> out;
  auto phi = gaussian(1.0, g);
  for (double lam : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    TfArray w = cross_wigner(phi, gaussian(lam, g));
    GenGaussian oracle = wigner_gaussian_pair(lam);
    double maxdiff = 0.0;
    for (int i = 0; i < w.xgrid.n; ++i)
      for (int j = 0; j < w.xigrid.n; ++j)
        maxdiff = std::max(maxdiff, std::abs(w.at(i, j) - oracle.eval(w.x(i), w.xi(j))));
    out.push_back(check("wigner_gauss.lambda=" + std::to_string(lam), maxdiff, 1e-8));
  }
  return out;
}

// Eq. (2.8): 2D STFT against the closed form on a 5^4 probe lattice.
inline std::vector<CheckResult> suite_stft_gen_gaussian() {
  std::vector<CheckResult> out;
  const AxisGrid g(128, 3.0 / 64.0);
  const GenGaussian window = prop23_window();
  TfArray win = sample_gen_gaussian(window, g, g);
  const int c = g.n / 2;
  const int offs[5] = {-4, -2, 0, 2, 4};
  struct Abc {
    double a, b, cc;
  };
  for (const Abc& abc : {Abc{1, 1, 0}, Abc{2, 3, 1}, Abc{4, 1, 2}}) {
    GenGaussian f(1.0, abc.a, abc.b, abc.cc);
    TfArray fs = sample_gen_gaussian(f, g, g);
    double maxrel = 0.0;
    for (int oz1 : offs)
      for (int oz2 : offs) {
        TfArray plane = stft2d_at(fs, win, c + oz1, c + oz2);
        for (int oj1 : offs)
          for (int oj2 : offs) {
            cplx numeric = plane.at(c + oj1, c + oj2);
            cplx exact = stft_gen_gaussian(f, {g.node(c + oz1), g.node(c + oz2)},
                                           {plane.xgrid.node(c + oj1), plane.xigrid.node(c + oj2)});
            maxrel = std::max(maxrel, std::abs(numeric - exact) / std::abs(exact));
          }
      }
    char name[64];
    std::snprintf(name, sizeof(name), "stft_gen_gauss.(%g,%g,%g)", abc.a, abc.b, abc.cc);
    out.push_back(check(name, maxrel, 1e-6));
  }
  return out;
}

// Eq. (2.9): numeric-to-formula ratio constant across the {1,2,4}^3 lattice,
// with the (2,2) reference value 1/2 at (1,1,0).
inline std::vector<CheckResult> suite_mod_norm_formula() {
  std::vector<CheckResult> out;
  const AxisGrid g(128, 3.0 / 64.0);
  const std::vector<ExtReal> ps = {ExtReal(2), ExtReal(1), ext_inf};
  const std::vector<ExtReal> qs = {ExtReal(2), ext_inf, ExtReal(1)};
  std::vector<std::vector<double>> ratios(ps.size());
  double reference22 = 0.0;
  for (double a : {1.0, 2.0, 4.0})
    for (double b : {1.0, 2.0, 4.0})
      for (double c : {1.0, 2.0, 4.0}) {
        GenGaussian f(1.0, a, b, c);
        TfArray fs = sample_gen_gaussian(f, g, g);
        std::vector<double> norms = detail::phase_space_norms_impl(fs, prop23_window(), ps, qs, 0.0);
        for (size_t k = 0; k < ps.size(); ++k)
          ratios[k].push_back(norms[k] / mod_norm_gen_gaussian(f, ps[k], qs[k]));
      }
  {
    GenGaussian ref(1.0, 1.0, 1.0, 0.0);
    TfArray fs = sample_gen_gaussian(ref, g, g);
    reference22 = detail::phase_space_norms_impl(fs, prop23_window(), {ExtReal(2)}, {ExtReal(2)},
                                                 0.0)[0] /
                  mod_norm_gen_gaussian(ref, 2, 2);
  }
  const char* names[3] = {"(2,2)", "(1,inf)", "(inf,1)"};
  for (size_t k = 0; k < ps.size(); ++k) {
    double lo = ratios[k][0], hi = ratios[k][0];
    for (double r : ratios[k]) {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    double mean = 0.5 * (lo + hi);
    double spread = (hi - lo) / (2.0 * mean);
    out.push_back(check(std::string("mod_norm_formula.spread") + names[k], spread, 0.02));
  }
  out.push_back(check("mod_norm_formula.reference(1,1,0)@(2,2)",
                      std::abs(reference22 - 0.5) / 0.5, 0.02));
  return out;
}

// Eq. (2.10): numeric tail slopes of ||W(phi,phi_lambda)||_{M^{p,q}} against
// the rational-arithmetic limits.
inline std::vector<CheckResult> suite_wigner_norm_slopes(
    const SweepResolution& res = SweepResolution{}) {
  std::vector<CheckResult> out;
  auto lambdas = default_sweep_lambdas();
  struct Pq {
    ExtReal p, q;
    const char* name;
  };
  for (const Pq& pq : {Pq{ExtReal(2), ExtReal(2), "(2,2)"}, Pq{ExtReal(1), ext_inf, "(1,inf)"},
                       Pq{ExtReal(2), ExtReal(4), "(2,4)"}}) {
    std::vector<double> vals;
    for (double l : lambdas)
      vals.push_back(detail::cached_wigner_offdiag_norm(l, pq.p, pq.q, res.grid));
    const int k = 4;
    std::vector<double> l0(lambdas.begin(), lambdas.begin() + k);
    std::vector<double> v0(vals.begin(), vals.begin() + k);
    std::vector<double> li(lambdas.end() - k, lambdas.end());
    std::vector<double> vi(vals.end() - k, vals.end());
    auto pred = wigner_norm_slopes(pq.p, pq.q);
    double s0 = detail::fit_slope(l0, v0);
    double si = detail::fit_slope(li, vi);
    out.push_back(check(std::string("eq210.slope0") + pq.name,
                        std::abs(s0 - pred.first.to_double()), 0.05));
    out.push_back(check(std::string("eq210.slopeInf") + pq.name,
                        std::abs(si - pred.second.to_double()), 0.05));
  }
  return out;
}

inline std::vector<CheckResult> suite_gaussian_oracles() {
  std::vector<CheckResult> out;
  for (auto&& r : suite_wigner_gaussian()) out.push_back(r);
  for (auto&& r : suite_stft_gen_gaussian()) out.push_back(r);
  for (auto&& r : suite_mod_norm_formula()) out.push_back(r);
  for (auto&& r : suite_wigner_norm_slopes()) out.push_back(r);
  return out;
}

// Lemma 4.1: ||W(f1,f2)||_{M^{p,q}} equals ||A(f1,f2)||_{W(FL^p,L^q)}.
inline std::vector<CheckResult> suite_lemma41() {
  std::vector<CheckResult> out;
  const AxisGrid g(64, 1.0 / 8.0);
  auto phi = gaussian(1.0, g);
  std::vector<std::pair<SampledSignal, SampledSignal>> pairs;
  pairs.emplace_back(phi, gaussian(2.0, g));
  pairs.emplace_back(phi, phi);
  pairs.emplace_back(gaussian(0.5, g), gaussian(2.0, g));
  pairs.emplace_back(phi, detail_v::atom_signal(1.0, 1.0, 1.0, g));
  pairs.emplace_back(detail_v::atom_signal(1.0, 1.0, 0.0, g), gaussian(0.5, g));
  struct Pq {
    ExtReal p, q;
    const char* name;
  };
  int k = 0;
  for (const auto& [f1, f2] : pairs) {
    TfArray w = cross_wigner(f1, f2);
    TfArray a = ambiguity(f1, f2);
    for (const Pq& pq : {Pq{ExtReal(2), ExtReal(2), "(2,2)"}, Pq{ExtReal(1), ExtReal(2), "(1,2)"}}) {
      double lhs = modulation_norm_phase_space(w, pq.p, pq.q, 0.0);
      double rhs = amalgam_norm(a, pq.p, pq.q, 0.0);
      out.push_back(check("lemma41.pair" + std::to_string(k) + pq.name,
                          std::abs(lhs - rhs) / rhs, 0.02));
    }
    ++k;
  }
  return out;
}

// Weak Weyl identity <L_sigma f, g> = <sigma, W(g,f)>, plus the sigma = 1
// identity operator and the sigma = W(phi,phi) rank-one projector.
inline std::vector<CheckResult> suite_weak_identity() {
  std::vector<CheckResult> out;
  const AxisGrid g(128, 1.0 / 16.0);
  auto [sx, sxi] = weyl_symbol_grids(g);
  auto phi = gaussian(1.0, g);

  std::vector<std::pair<std::string, TfArray>> symbols;
  symbols.emplace_back("W(phi,phi)", sample_gen_gaussian(default_phase_window(), sx, sxi));
  symbols.emplace_back("gengauss(1,2,.5)", sample_gen_gaussian(GenGaussian(1.0, 1.0, 2.0, 0.5), sx, sxi));
  {
    TfArray ones(sx, sxi);
    for (auto& z : ones.v) z = cplx{1.0, 0.0};
    symbols.emplace_back("const1", std::move(ones));
  }

  // 25 deterministic Gaussian pairs
  std::vector<SampledSignal> fam;
  for (double lam : {0.5, 1.0, 2.0})
    for (double x0 : {-1.0, 0.0, 1.5})
      for (double xi0 : {-1.0, 0.5, 1.0})
        fam.push_back(detail_v::atom_signal(lam, x0, xi0, g, std::polar(1.0, 0.7 * x0 + xi0)));

  for (const auto& [name, sigma] : symbols) {
    OperatorMatrix op = weyl_matrix(sigma, g);
    double sigmax = 0.0;
    for (const auto& z : sigma.v) sigmax = std::max(sigmax, std::abs(z));
    double worst = 0.0;
    int pairs = 0;
    for (size_t i = 0; i < fam.size() && pairs < 25; i += 2) {
      const auto& f = fam[i];
      const auto& gg = fam[(i + 7) % fam.size()];
      cplx lhs = inner_product(op.apply(f), gg);
      cplx rhs = phase_space_pairing(sigma, cross_wigner(gg, f));
      double denom = sigmax * l2_norm(f) * l2_norm(gg);
      worst = std::max(worst, std::abs(lhs - rhs) / denom);
      ++pairs;
    }
    out.push_back(check("weak_identity." + name, worst, 1e-5));
  }

  {
    TfArray ones(sx, sxi);
    for (auto& z : ones.v) z = cplx{1.0, 0.0};
    OperatorMatrix op = weyl_matrix(ones, g);
    double worst = 0.0;
    for (const auto& f : {phi, detail_v::atom_signal(2.0, 1.0, -1.0, g)}) {
      SampledSignal lf = op.apply(f);
      double diff = 0.0;
      for (int i = 0; i < g.n; ++i)
        diff += std::norm(lf.samples[static_cast<size_t>(i)] - f.samples[static_cast<size_t>(i)]);
      worst = std::max(worst, std::sqrt(diff * g.delta) / l2_norm(f));
    }
    out.push_back(check("weyl.identity_sigma1", worst, 1e-6));
  }
  {
    TfArray proj = sample_gen_gaussian(default_phase_window(), sx, sxi);
    OperatorMatrix op = weyl_matrix(proj, g);
    double worst = 0.0;
    for (const auto& f : {detail_v::atom_signal(2.0, 0.5, 0.5, g), phi}) {
      SampledSignal lf = op.apply(f);
      cplx coef = inner_product(f, phi);
      double diff = 0.0, ref = 0.0;
      for (int i = 0; i < g.n; ++i) {
        cplx expect = coef * phi.samples[static_cast<size_t>(i)];
        diff += std::norm(lf.samples[static_cast<size_t>(i)] - expect);
        ref += std::norm(expect);
      }
      worst = std::max(worst, std::sqrt(diff / ref));
    }
    out.push_back(check("weyl.projector_Wphiphi", worst, 1e-6));
  }
  return out;
}

// Cohen suite: delta kernel identity, Ci(1) reference, tau/Born-Jordan
// bound-ratio stability across the dilation family.
inline std::vector<CheckResult> suite_cohen() {
  std::vector<CheckResult> out;
  const AxisGrid g(64, 1.0 / 8.0);
  auto phi = gaussian(1.0, g);
  {
    TfArray w = cross_wigner(phi, phi);
    TfArray m = cohen_distribution(phi, make_delta_kernel(w.xgrid, w.xigrid));
    double wmax = 0.0, diff = 0.0;
    for (size_t i = 0; i < w.v.size(); ++i) {
      wmax = std::max(wmax, std::abs(w.v[i]));
      diff = std::max(diff, std::abs(w.v[i] - m.v[i]));
    }
    out.push_back(check("cohen.delta_identity", diff / wmax, 1e-12));
  }
  out.push_back(
      check("cohen.Ci(1)", std::abs(cosine_integral(1.0) - 0.337403922900968), 1e-12));
  for (const char* kname : {"tau0", "bj"}) {
    CohenKernel kernel = std::string(kname) == "tau0" ? CohenKernel::make_tau(0.0)
                                                      : CohenKernel::make_born_jordan();
    double lo = 1e300, hi = 0.0;
    for (double lam : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      double r = cohen_bound_check(gaussian(lam, g), kernel, 2, 2, 2, 2, 0.0);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    out.push_back(check(std::string("cohen.stability.") + kname, hi / lo, 3.0));
  }
  return out;
}

inline std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "moyal") return suite_moyal();
  if (name == "gaussian-oracles") return suite_gaussian_oracles();
  if (name == "lemma41") return suite_lemma41();
  if (name == "weak-identity") return suite_weak_identity();
  if (name == "cohen") return suite_cohen();
  fail(errc::invalid_input, "unknown verify suite '" + name + "'");
}

} // namespace verify
} // namespace tfb
