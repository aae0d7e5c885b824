#pragma once

#include <string>
#include <vector>

#include "tfb/norms.hpp"

namespace tfb {

// Dense operator acting on sample vectors of one fixed grid; apply() carries
// the Riemann measure, so the matrix holds kernel values k(y_i, t_j).
struct OperatorMatrix {
  AxisGrid grid;
  std::vector<cplx> k; // row-major n x n
  std::string provenance;

  OperatorMatrix() = default;
  OperatorMatrix(const AxisGrid& g, std::string prov)
      : grid(g), k(static_cast<size_t>(g.n) * g.n, cplx{0.0, 0.0}), provenance(std::move(prov)) {}

  cplx& at(int i, int j) { return k[static_cast<size_t>(i) * grid.n + j]; }
  const cplx& at(int i, int j) const { return k[static_cast<size_t>(i) * grid.n + j]; }

  SampledSignal apply(const SampledSignal& f) const {
    require_same_grid(grid, f.grid, "OperatorMatrix::apply");
    SampledSignal out;
    out.grid = grid;
    out.samples.assign(static_cast<size_t>(grid.n), cplx{0.0, 0.0});
    for (int i = 0; i < grid.n; ++i) {
      cplx acc{0.0, 0.0};
      for (int j = 0; j < grid.n; ++j) acc += at(i, j) * f.samples[static_cast<size_t>(j)];
      out.samples[static_cast<size_t>(i)] = acc * grid.delta;
    }
    return out;
  }

  OperatorMatrix adjoint() const {
    OperatorMatrix a(grid, provenance + "-adjoint");
    for (int i = 0; i < grid.n; ++i)
      for (int j = 0; j < grid.n; ++j) a.at(i, j) = std::conj(at(j, i));
    return a;
  }
};

// Grids a Weyl symbol must live on for a signal grid g: the cross_wigner
// output grids (x: g, xi: dual of the doubled-spacing t-grid).
inline std::pair<AxisGrid, AxisGrid> weyl_symbol_grids(const AxisGrid& g) {
  return {g, AxisGrid(g.n, 2.0 * g.delta).dual()};
}

// L_sigma from the kernel realization of the weak definition:
//   k(y,t) = ktilde((y+t)/2, y-t),  ktilde(x,u) = int sigma(x,xi) e^{2pi i u xi} dxi.
// Midpoints use a x2-refined x-axis; the xi-axis is zero-extended (same
// spacing, doubled extent) so the difference lattice y-t is exactly the dual
// u-grid. Validated against the weak identity <L_sigma f, g> = <sigma, W(g,f)>.
inline OperatorMatrix weyl_matrix(const TfArray& sigma, const AxisGrid& g) {
  auto [gx, gxi] = weyl_symbol_grids(g);
  if (sigma.xgrid != gx || sigma.xigrid != gxi)
    fail(errc::grid_mismatch, "weyl_matrix: symbol must live on the Wigner grids of the signal");
  const int n = g.n;

  // x2 in x (midpoints); analytic tag evaluated exactly when present
  TfArray fine(AxisGrid(2 * n, g.delta / 2.0), sigma.xigrid);
  if (sigma.tag) {
    fine = sample_gen_gaussian(*sigma.tag, fine.xgrid, fine.xigrid);
  } else {
    // upsample x-axis only: per-column band-limited refinement
    std::vector<cplx> col(static_cast<size_t>(n));
    for (int j = 0; j < sigma.xigrid.n; ++j) {
      for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = sigma.at(i, j);
      AxisGrid fg;
      std::vector<cplx> up = detail::upsample2_centered(col, sigma.xgrid, fg);
      for (int i = 0; i < 2 * n; ++i) fine.at(i, j) = up[static_cast<size_t>(i)];
    }
  }

  // zero-extend xi (doubled extent, same spacing) then inverse FT to ktilde
  const AxisGrid xi_ext(2 * n, sigma.xigrid.delta);
  const AxisGrid ugrid = xi_ext.dual(); // spacing = g.delta, extent 2L
  TfArray ktilde(fine.xgrid, ugrid);
  std::vector<cplx> row(static_cast<size_t>(2 * n), cplx{0.0, 0.0});
  for (int i = 0; i < fine.xgrid.n; ++i) {
    std::fill(row.begin(), row.end(), cplx{0.0, 0.0});
    for (int j = 0; j < n; ++j) row[static_cast<size_t>(j + n / 2)] = fine.at(i, j);
    // int sigma(x,xi) e^{+2pi i u xi} dxi: the backward centered transform's
    // 1/extent scale equals the xi spacing here, so no extra measure factor
    detail::centered_ft_inplace(row, ugrid, false);
    for (int r = 0; r < 2 * n; ++r) ktilde.at(i, r) = row[static_cast<size_t>(r)];
  }

  OperatorMatrix op(g, "weyl");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) op.at(i, j) = ktilde.at(i + j, i - j + n);
  return op;
}

inline SampledSignal weyl_apply(const TfArray& sigma, const SampledSignal& f) {
  return weyl_matrix(sigma, f.grid).apply(f);
}

inline cplx phase_space_pairing(const TfArray& sigma, const TfArray& w) {
  if (!sigma.same_grids(w)) fail(errc::grid_mismatch, "phase_space_pairing: grids differ");
  cplx s{0.0, 0.0};
  for (size_t i = 0; i < sigma.v.size(); ++i) s += sigma.v[i] * std::conj(w.v[i]);
  return s * sigma.cell();
}

// A_a^{phi1,phi2} f = sum a(x,xi) V_{phi1}f(x,xi) M_xi T_x phi2 dx dxi,
// with a on the STFT grids (x: signal grid, xi: its dual).
inline SampledSignal localization_apply(const TfArray& a, const SampledSignal& phi1,
                                        const SampledSignal& phi2, const SampledSignal& f) {
  require_same_grid(phi1.grid, f.grid, "localization_apply");
  require_same_grid(phi2.grid, f.grid, "localization_apply");
  if (a.xgrid != f.grid || a.xigrid != f.grid.dual())
    fail(errc::grid_mismatch, "localization_apply: symbol must live on the STFT grids");
  const int n = f.grid.n;
  TfArray v = stft(f, phi1);
  SampledSignal out;
  out.grid = f.grid;
  out.samples.assign(static_cast<size_t>(n), cplx{0.0, 0.0});
  std::vector<cplx> row(static_cast<size_t>(n));
  for (int kx = 0; kx < n; ++kx) {
    for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = a.at(kx, j) * v.at(kx, j);
    // sum_j (aV)(x_k, xi_j) e^{2pi i xi_j t} dxi == backward centered FT
    detail::centered_ft_inplace(row, f.grid, false);
    const int sh = kx - n / 2;
    for (int i = 0; i < n; ++i)
      out.samples[static_cast<size_t>(i)] += row[static_cast<size_t>(i)] * phi2.at_index(i - sh);
  }
  for (auto& z : out.samples) z *= f.grid.delta; // the dx of the synthesis integral
  return out;
}

// Weyl symbol of the localization operator: sigma = a * W(phi2, phi1),
// FFT convolution on the Wigner grids (a must be sampled there).
inline TfArray localization_weyl_symbol(const TfArray& a, const SampledSignal& phi1,
                                        const SampledSignal& phi2) {
  TfArray w = cross_wigner(phi2, phi1);
  if (!a.same_grids(w))
    fail(errc::grid_mismatch, "localization_weyl_symbol: symbol must live on the Wigner grids");
  TfArray sigma = detail::convolve2(a, w);
  sigma.tag.reset();
  return sigma;
}

// Certified lower bound of ||op||_{M^{from} -> M^{to}}: maximum Rayleigh-type
// ratio over a fixed family of dilated, time-frequency shifted Gaussians.
inline double operator_norm_lower_bound(const OperatorMatrix& op, const MixedNormSpec& from,
                                        const MixedNormSpec& to, int trials) {
  if (trials < 10) fail(errc::empty_family, "operator_norm_lower_bound: needs trials >= 10");
  std::vector<GaussianAtom> family;
  const double shift = 8.0 * op.grid.delta;
  const double mods = 8.0 / op.grid.extent();
  for (double lam : {1.0, 0.5, 2.0})
    for (double x0 : {0.0, shift, -shift})
      for (double xi0 : {0.0, mods, -mods})
        family.push_back(GaussianAtom{cplx{1.0, 0.0}, lam, x0, xi0});
  if (trials > static_cast<int>(family.size())) trials = static_cast<int>(family.size());
  double best = 0.0;
  for (int i = 0; i < trials; ++i) {
    SampledSignal f = sample_atoms({family[static_cast<size_t>(i)]}, op.grid);
    SampledSignal g = op.apply(f);
    double den = modulation_norm(f, from.p, from.q, from.s);
    double num = modulation_norm(g, to.p, to.q, to.s);
    best = std::max(best, num / den);
  }
  return best;
}

} // namespace tfb
