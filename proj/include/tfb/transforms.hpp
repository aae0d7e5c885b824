#pragma once

#include <utility>
#include <vector>

#include "tfb/signal.hpp"
#include "tfb/tfarray.hpp"

namespace tfb {

// V_g f(x,xi) = int f(t) conj(g(t-x)) e^{-2pi i xi t} dt, with x on the signal
// grid and xi on its dual.
inline TfArray stft(const SampledSignal& f, const SampledSignal& g) {
  require_same_grid(f.grid, g.grid, "stft");
  bool nonzero = false;
  for (const auto& z : g.samples)
    if (std::abs(z) > 0.0) {
      nonzero = true;
      break;
    }
  if (!nonzero) fail(errc::zero_window, "stft: window is identically zero");

  const int n = f.grid.n;
  TfArray out(f.grid, f.grid.dual());
  std::vector<cplx> row(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int sh = i - n / 2;
    for (int m = 0; m < n; ++m)
      row[static_cast<size_t>(m)] =
          f.samples[static_cast<size_t>(m)] * std::conj(g.at_index(m - sh));
    detail::centered_ft_inplace(row, f.grid, true);
    for (int j = 0; j < n; ++j) out.at(i, j) = row[static_cast<size_t>(j)];
  }
  return out;
}

// W(f1,f2)(x,xi) = int f1(x+t/2) conj(f2(x-t/2)) e^{-2pi i xi t} dt.
// The t-grid spans [-L, L) with the signal's n nodes (spacing 2*delta), so
// x +- t/2 lands on the signal grid and the output xi-grid has spacing 1/(2L).
inline TfArray cross_wigner(const SampledSignal& f1, const SampledSignal& f2) {
  require_same_grid(f1.grid, f2.grid, "cross_wigner");
  const int n = f1.grid.n;
  const AxisGrid tgrid(n, 2.0 * f1.grid.delta);
  TfArray out(f1.grid, tgrid.dual());
  std::vector<cplx> row(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < n; ++m) {
      const int off = m - n / 2;
      row[static_cast<size_t>(m)] = f1.at_index(i + off) * std::conj(f2.at_index(i - off));
    }
    detail::centered_ft_inplace(row, tgrid, true);
    for (int j = 0; j < n; ++j) out.at(i, j) = row[static_cast<size_t>(j)];
  }
  return out;
}

// A(f1,f2)(x,xi) = int f1(t+x/2) conj(f2(t-x/2)) e^{-2pi i t xi} dt.
// Lag axis [-L, L) with spacing 2*delta; xi on the signal dual grid.
inline TfArray ambiguity(const SampledSignal& f1, const SampledSignal& f2) {
  require_same_grid(f1.grid, f2.grid, "ambiguity");
  const int n = f1.grid.n;
  const AxisGrid lag(n, 2.0 * f1.grid.delta);
  TfArray out(lag, f1.grid.dual());
  std::vector<cplx> row(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int sh = i - n / 2;
    for (int m = 0; m < n; ++m)
      row[static_cast<size_t>(m)] = f1.at_index(m + sh) * std::conj(f2.at_index(m - sh));
    detail::centered_ft_inplace(row, f1.grid, true);
    for (int j = 0; j < n; ++j) out.at(i, j) = row[static_cast<size_t>(j)];
  }
  return out;
}

// U F(x,xi) = F(xi,-x), exact index permutation; requires a square grid.
inline TfArray symplectic_rotation(const TfArray& f) {
  if (f.xgrid != f.xigrid)
    fail(errc::non_square_grid, "symplectic_rotation: grid must be square (n and delta equal)");
  TfArray out(f.xgrid, f.xigrid);
  const int n = f.xgrid.n;
  for (int i = 0; i < n; ++i) {
    const int ri = detail::reflect_index(i, n);
    for (int j = 0; j < n; ++j) out.at(i, j) = f.at(j, ri);
  }
  out.tag.reset();
  return out;
}

namespace detail {

// U on possibly-rectangular grids (axis metadata swaps with the values).
inline TfArray rotate_axes(const TfArray& f) {
  TfArray out(f.xigrid, f.xgrid);
  for (int i = 0; i < out.xgrid.n; ++i)
    for (int j = 0; j < out.xigrid.n; ++j)
      out.at(i, j) = f.at(j, reflect_index(i, f.xgrid.n));
  return out;
}

} // namespace detail

// W(f1,f2) = F(U A(f1,f2)) (2D Fourier transform after the rotation); the grid
// algebra reproduces cross_wigner's output grids exactly.
inline TfArray wigner_from_ambiguity(const SampledSignal& f1, const SampledSignal& f2) {
  TfArray a = ambiguity(f1, f2);
  TfArray ua = detail::rotate_axes(a);
  return detail::centered_ft_2d(ua, true);
}

// 4D array V_G F(z, zeta): z on F's grids, zeta on their duals.
struct Tf4 {
  AxisGrid z1, z2, zeta1, zeta2;
  std::vector<cplx> v;

  cplx& at(int i1, int i2, int j1, int j2) {
    return v[((static_cast<size_t>(i1) * z2.n + i2) * zeta1.n + j1) * zeta2.n + j2];
  }
  const cplx& at(int i1, int i2, int j1, int j2) const {
    return v[((static_cast<size_t>(i1) * z2.n + i2) * zeta1.n + j1) * zeta2.n + j2];
  }
};

inline constexpr int k4dLatticeCap = 64;

// One z-slice of the 2D-domain STFT: V_G F(z, .) for a fixed z-node, computed
// by a single 2D FFT of F . conj(G(. - z)).
inline TfArray stft2d_at(const TfArray& f, const TfArray& g, int s1, int s2) {
  if (!f.same_grids(g)) fail(errc::grid_mismatch, "stft2d_at: F and G grids differ");
  const int n1 = f.xgrid.n, n2 = f.xigrid.n;
  const int sh1 = s1 - n1 / 2, sh2 = s2 - n2 / 2;
  TfArray prod(f.xgrid, f.xigrid);
  for (int i = 0; i < n1; ++i) {
    const int gi = i - sh1;
    for (int j = 0; j < n2; ++j) {
      const int gj = j - sh2;
      cplx gv{0.0, 0.0};
      if (gi >= 0 && gi < n1 && gj >= 0 && gj < n2) gv = g.at(gi, gj);
      else if (g.tag) gv = g.tag->eval(f.xgrid.node(gi), f.xigrid.node(gj));
      prod.at(i, j) = f.at(i, j) * std::conj(gv);
    }
  }
  return detail::centered_ft_2d(prod, true);
}

// Full 4D STFT table (test-scale only; a 64^4 lattice cap guards memory).
inline Tf4 stft2d(const TfArray& f, const TfArray& g) {
  if (!f.same_grids(g)) fail(errc::grid_mismatch, "stft2d: F and G grids differ");
  if (f.xgrid.n > k4dLatticeCap || f.xigrid.n > k4dLatticeCap)
    fail(errc::lattice_too_large, "stft2d: 4D lattice side exceeds 64");
  Tf4 out;
  out.z1 = f.xgrid;
  out.z2 = f.xigrid;
  out.zeta1 = f.xgrid.dual();
  out.zeta2 = f.xigrid.dual();
  out.v.resize(static_cast<size_t>(f.xgrid.n) * f.xigrid.n * f.xgrid.n * f.xigrid.n);
  for (int i1 = 0; i1 < f.xgrid.n; ++i1)
    for (int i2 = 0; i2 < f.xigrid.n; ++i2) {
      TfArray plane = stft2d_at(f, g, i1, i2);
      for (int j1 = 0; j1 < plane.xgrid.n; ++j1)
        for (int j2 = 0; j2 < plane.xigrid.n; ++j2) out.at(i1, i2, j1, j2) = plane.at(j1, j2);
    }
  return out;
}

// Probe point for the factored STFT-of-Wigner evaluation.
struct PhaseSpaceProbe {
  double z1, z2, zeta1, zeta2;
};

// V_Phi(W(f1,f2))(z,zeta) for Phi = W(g,g), via the factored identity
//   e^{-2pi i z2 zeta2} conj(V_g f2(z1+zeta2/2, z2-zeta1/2)) V_g f1(z1-zeta2/2, z2+zeta1/2),
// evaluated from x2-upsampled STFT tables of f1 and f2.
inline std::vector<cplx> stft_of_wigner_factored(const SampledSignal& f1, const SampledSignal& f2,
                                                 const SampledSignal& g,
                                                 const std::vector<PhaseSpaceProbe>& probes) {
  if (!g.tagged())
    fail(errc::invalid_input, "stft_of_wigner_factored: window must carry a Gaussian tag");
  TfArray v1 = stft(f1, g);
  TfArray v2 = stft(f2, g);
  TfArray v1u = detail::upsample2_2d(v1);
  TfArray v2u = detail::upsample2_2d(v2);

  auto lookup = [](const TfArray& t, double x, double xi) -> cplx {
    int i, j;
    if (!t.xgrid.index_of(x, i) || !t.xigrid.index_of(xi, j))
      fail(errc::probe_out_of_range, "stft_of_wigner_factored: probe not on the half-grid lattice");
    return t.at(i, j);
  };

  std::vector<cplx> out;
  out.reserve(probes.size());
  for (const auto& p : probes) {
    cplx phase = std::polar(1.0, -2.0 * pi * p.z2 * p.zeta2);
    cplx a = std::conj(lookup(v2u, p.z1 + p.zeta2 / 2.0, p.z2 - p.zeta1 / 2.0));
    cplx b = lookup(v1u, p.z1 - p.zeta2 / 2.0, p.z2 + p.zeta1 / 2.0);
    out.push_back(phase * a * b);
  }
  return out;
}

} // namespace tfb
