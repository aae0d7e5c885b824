#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "tfb/fft.hpp"
#include "tfb/grid.hpp"

namespace tfb {

inline constexpr double pi = std::numbers::pi;

// One term of the analytic Gaussian family:
//   coef * exp(-pi*lambda*(t - x0)^2) * exp(2pi i xi0 t).
// The family is closed under translation, modulation and Fourier transform,
// which keeps analytic tags exact through every operator in the library.
struct GaussianAtom {
  cplx coef{1.0, 0.0};
  double lambda = 1.0;
  double x0 = 0.0;
  double xi0 = 0.0;

  cplx eval(double t) const {
    double u = t - x0;
    return coef * std::exp(-pi * lambda * u * u) * std::polar(1.0, 2.0 * pi * xi0 * t);
  }

  GaussianAtom translated(double a) const {
    GaussianAtom r = *this;
    r.x0 += a;
    r.coef *= std::polar(1.0, -2.0 * pi * xi0 * a);
    return r;
  }

  GaussianAtom modulated(double b) const {
    GaussianAtom r = *this;
    r.xi0 += b;
    return r;
  }

  // F[coef e^{-pi l (t-x0)^2} e^{2pi i xi0 t}](xi)
  //   = coef e^{2pi i x0 xi0} l^{-1/2} e^{-pi (xi-xi0)^2 / l} e^{-2pi i x0 xi}.
  GaussianAtom fourier() const {
    GaussianAtom r;
    r.coef = coef * std::polar(1.0 / std::sqrt(lambda), 2.0 * pi * x0 * xi0);
    r.lambda = 1.0 / lambda;
    r.x0 = xi0;
    r.xi0 = -x0;
    return r;
  }
};

using GaussianSum = std::vector<GaussianAtom>;

inline cplx eval_atoms(const GaussianSum& atoms, double t) {
  cplx s{0.0, 0.0};
  for (const auto& a : atoms) s += a.eval(t);
  return s;
}

// Complex samples on a centered grid, optionally carrying the exact Gaussian
// evaluator they were sampled from.
struct SampledSignal {
  AxisGrid grid;
  std::vector<cplx> samples;
  std::optional<GaussianSum> analytic;

  SampledSignal() = default;
  SampledSignal(const AxisGrid& g, std::vector<cplx> s) : grid(g), samples(std::move(s)) {
    if (static_cast<int>(samples.size()) != grid.n)
      fail(errc::invalid_input, "SampledSignal: sample count does not match grid");
  }

  bool tagged() const { return analytic.has_value(); }

  // Value at an arbitrary point: exact for tagged signals, zero off-grid
  // otherwise (callers needing interpolation should upsample first).
  cplx value_at(double t) const {
    if (analytic) return eval_atoms(*analytic, t);
    int k;
    if (grid.index_of(t, k)) return samples[static_cast<size_t>(k)];
    return cplx{0.0, 0.0};
  }

  // Sample value by (possibly out-of-range) node index.
  cplx at_index(int k) const {
    if (k >= 0 && k < grid.n) return samples[static_cast<size_t>(k)];
    if (analytic) return eval_atoms(*analytic, grid.node(k));
    return cplx{0.0, 0.0};
  }
};

inline SampledSignal sample_atoms(const GaussianSum& atoms, const AxisGrid& g) {
  SampledSignal s;
  s.grid = g;
  s.samples.resize(static_cast<size_t>(g.n));
  for (int k = 0; k < g.n; ++k) s.samples[static_cast<size_t>(k)] = eval_atoms(atoms, g.node(k));
  s.analytic = atoms;
  return s;
}

inline AxisGrid default_grid() { return AxisGrid(256, 1.0 / 16.0); }

// phi_lambda(t) = exp(-pi lambda t^2); phi = phi_1.
inline SampledSignal gaussian(double lambda, const AxisGrid& g = default_grid()) {
  if (!(lambda > 0.0)) fail(errc::non_positive_lambda, "gaussian: lambda must be positive");
  return sample_atoms({GaussianAtom{cplx{1.0, 0.0}, lambda, 0.0, 0.0}}, g);
}

inline SampledSignal translate(const SampledSignal& f, double x0) {
  SampledSignal r;
  r.grid = f.grid;
  r.samples.resize(static_cast<size_t>(f.grid.n));
  if (f.analytic) {
    GaussianSum atoms;
    atoms.reserve(f.analytic->size());
    for (const auto& a : *f.analytic) atoms.push_back(a.translated(x0));
    return sample_atoms(atoms, f.grid);
  }
  double steps = x0 / f.grid.delta;
  double rounded = std::round(steps);
  if (std::abs(steps - rounded) > 1e-9)
    fail(errc::non_grid_shift, "translate: shift is off-grid and signal has no analytic tag");
  int sh = static_cast<int>(rounded);
  for (int k = 0; k < f.grid.n; ++k) {
    int src = k - sh;
    r.samples[static_cast<size_t>(k)] =
        (src >= 0 && src < f.grid.n) ? f.samples[static_cast<size_t>(src)] : cplx{0.0, 0.0};
  }
  return r;
}

inline SampledSignal modulate(const SampledSignal& f, double xi0) {
  if (f.analytic) {
    GaussianSum atoms;
    atoms.reserve(f.analytic->size());
    for (const auto& a : *f.analytic) atoms.push_back(a.modulated(xi0));
    return sample_atoms(atoms, f.grid);
  }
  SampledSignal r;
  r.grid = f.grid;
  r.samples.resize(static_cast<size_t>(f.grid.n));
  for (int k = 0; k < f.grid.n; ++k)
    r.samples[static_cast<size_t>(k)] =
        f.samples[static_cast<size_t>(k)] * std::polar(1.0, 2.0 * pi * xi0 * f.grid.node(k));
  return r;
}

// Riemann inner product <f,g> = sum f[k] conj(g[k]) delta.
inline cplx inner_product(const SampledSignal& f, const SampledSignal& g) {
  require_same_grid(f.grid, g.grid, "inner_product");
  cplx s{0.0, 0.0};
  for (int k = 0; k < f.grid.n; ++k)
    s += f.samples[static_cast<size_t>(k)] * std::conj(g.samples[static_cast<size_t>(k)]);
  return s * f.grid.delta;
}

inline double l2_norm(const SampledSignal& f) {
  double s = 0.0;
  for (const auto& v : f.samples) s += std::norm(v);
  return std::sqrt(s * f.grid.delta);
}

// F f(xi) = int f(t) e^{-2pi i t xi} dt on the dual grid. Analytic tags are
// transformed exactly alongside the samples.
inline SampledSignal fourier_transform(const SampledSignal& f, bool forward = true) {
  SampledSignal r;
  const AxisGrid spatial = forward ? f.grid : f.grid.dual();
  r.grid = forward ? f.grid.dual() : f.grid.dual();
  r.samples = f.samples;
  detail::centered_ft_inplace(r.samples, spatial, forward);
  if (f.analytic) {
    GaussianSum atoms;
    atoms.reserve(f.analytic->size());
    for (const auto& a : *f.analytic) {
      GaussianAtom t = a.fourier();
      if (!forward) {
        // inverse transform: F^{-1} h(t) = (F h)(-t); reflect the atom
        t.x0 = -t.x0;
        t.xi0 = -t.xi0;
      }
      atoms.push_back(t);
    }
    r.analytic = std::move(atoms);
  }
  return r;
}

inline SampledSignal inverse_fourier_transform(const SampledSignal& f) {
  return fourier_transform(f, false);
}

// Factor-2 band-limited refinement (same extent, delta/2); exact for tagged
// signals, FFT zero-padding otherwise.
inline SampledSignal upsample2(const SampledSignal& f) {
  AxisGrid fine(2 * f.grid.n, f.grid.delta / 2.0);
  if (f.analytic) return sample_atoms(*f.analytic, fine);
  SampledSignal r;
  AxisGrid out;
  r.samples = detail::upsample2_centered(f.samples, f.grid, out);
  r.grid = out;
  return r;
}

} // namespace tfb
