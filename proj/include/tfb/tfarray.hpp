#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tfb/fft.hpp"
#include "tfb/gaussians.hpp"
#include "tfb/grid.hpp"

namespace tfb {

// Complex samples of a phase-space function on a 2D grid (x along rows,
// xi along columns, row-major), with an optional exact Gaussian tag.
struct TfArray {
  AxisGrid xgrid;
  AxisGrid xigrid;
  std::vector<cplx> v; // size xgrid.n * xigrid.n
  std::optional<GenGaussian> tag;

  TfArray() = default;
  TfArray(const AxisGrid& gx, const AxisGrid& gxi)
      : xgrid(gx), xigrid(gxi),
        v(static_cast<size_t>(gx.n) * static_cast<size_t>(gxi.n), cplx{0.0, 0.0}) {}

  cplx& at(int i, int j) { return v[static_cast<size_t>(i) * xigrid.n + j]; }
  const cplx& at(int i, int j) const { return v[static_cast<size_t>(i) * xigrid.n + j]; }

  double x(int i) const { return xgrid.node(i); }
  double xi(int j) const { return xigrid.node(j); }

  double cell() const { return xgrid.delta * xigrid.delta; }

  bool same_grids(const TfArray& o) const { return xgrid == o.xgrid && xigrid == o.xigrid; }
};

inline TfArray sample_gen_gaussian(const GenGaussian& g, const AxisGrid& gx, const AxisGrid& gxi) {
  TfArray f(gx, gxi);
  for (int i = 0; i < gx.n; ++i)
    for (int j = 0; j < gxi.n; ++j) f.at(i, j) = g.eval(gx.node(i), gxi.node(j));
  f.tag = g;
  return f;
}

inline double l2_norm(const TfArray& f) {
  double s = 0.0;
  for (const auto& z : f.v) s += std::norm(z);
  return std::sqrt(s * f.cell());
}

namespace detail {

// index of -x_k on a centered grid (edge row k=0 wraps onto itself)
inline int reflect_index(int k, int n) { return k == 0 ? 0 : n - k; }

// Centered 2D Fourier transform: forward maps samples on (gx,gxi) to samples
// on the dual grids.
inline TfArray centered_ft_2d(const TfArray& f, bool forward) {
  TfArray r = f;
  r.tag.reset();
  const AxisGrid sx = forward ? f.xgrid : f.xgrid.dual();
  const AxisGrid sxi = forward ? f.xigrid : f.xigrid.dual();
  // axis 1 (xi, contiguous) then axis 0 (x, strided)
  centered_ft_axis(r.v, sxi, f.xgrid.n, f.xigrid.n, 1, forward);
  centered_ft_axis(r.v, sx, f.xigrid.n, 1, f.xigrid.n, forward);
  r.xgrid = sx.dual();
  r.xigrid = sxi.dual();
  return r;
}

// Zero-pad to doubled extents (same spacings), centered placement.
inline TfArray pad2_centered(const TfArray& f) {
  TfArray p(AxisGrid(2 * f.xgrid.n, f.xgrid.delta), AxisGrid(2 * f.xigrid.n, f.xigrid.delta));
  const int ox = f.xgrid.n / 2, oxi = f.xigrid.n / 2;
  for (int i = 0; i < f.xgrid.n; ++i)
    for (int j = 0; j < f.xigrid.n; ++j) p.at(i + ox, j + oxi) = f.at(i, j);
  return p;
}

inline TfArray crop2_centered(const TfArray& p, const AxisGrid& gx, const AxisGrid& gxi) {
  TfArray f(gx, gxi);
  const int ox = gx.n / 2, oxi = gxi.n / 2;
  for (int i = 0; i < gx.n; ++i)
    for (int j = 0; j < gxi.n; ++j) f.at(i, j) = p.at(i + ox, j + oxi);
  return f;
}

// Linear convolution (F * K)(w) = sum_u F(u) K(w - u) dx dxi, sampled on F's
// grids. F is zero-padded; the kernel is supplied as an evaluator on the
// padded lattice so non-decaying kernels (chirps, Born-Jordan) stay honest.
// Wrap-around terms carry F's padded zeros, so the circular product is exact
// linear convolution for the retained central region.
inline TfArray convolve2(const TfArray& f, const std::function<cplx(double, double)>& kernel) {
  TfArray fp = pad2_centered(f);
  const int N1 = fp.xgrid.n, N2 = fp.xigrid.n;
  // kernel pre-shifted so that circular conv with unshifted F aligns origins:
  // B[m] = K(node(m + o)) with o the padded origin.
  TfArray kp(fp.xgrid, fp.xigrid);
  for (int i = 0; i < N1; ++i) {
    const int si = (i + N1 / 2) % N1;
    const double xi_ = fp.xgrid.node(si);
    for (int j = 0; j < N2; ++j) {
      const int sj = (j + N2 / 2) % N2;
      kp.at(i, j) = kernel(xi_, fp.xigrid.node(sj));
    }
  }
  dft2_inplace(fp.v.data(), N1, N2, FFTW_FORWARD);
  dft2_inplace(kp.v.data(), N1, N2, FFTW_FORWARD);
  const double scale = f.cell() / (static_cast<double>(N1) * static_cast<double>(N2));
  for (size_t k = 0; k < fp.v.size(); ++k) fp.v[k] *= kp.v[k] * scale;
  dft2_inplace(fp.v.data(), N1, N2, FFTW_BACKWARD);
  return crop2_centered(fp, f.xgrid, f.xigrid);
}

// Convolution of two sampled arrays on identical grids (both zero-padded).
inline TfArray convolve2(const TfArray& f, const TfArray& k) {
  if (!f.same_grids(k)) fail(errc::grid_mismatch, "convolve2: argument grids differ");
  TfArray kp = pad2_centered(k);
  return convolve2(f, [&kp](double x, double xi) {
    int i, j;
    if (kp.xgrid.index_of(x, i) && kp.xigrid.index_of(xi, j)) return kp.at(i, j);
    return cplx{0.0, 0.0};
  });
}

// x2 band-limited upsampling along both axes (same extents).
inline TfArray upsample2_2d(const TfArray& f) {
  if (f.tag) {
    return sample_gen_gaussian(*f.tag, AxisGrid(2 * f.xgrid.n, f.xgrid.delta / 2.0),
                               AxisGrid(2 * f.xigrid.n, f.xigrid.delta / 2.0));
  }
  TfArray spec = centered_ft_2d(f, true);
  // embed the spectrum centered into the doubled dual lattice
  TfArray big(AxisGrid(2 * f.xgrid.n, f.xgrid.delta / 2.0),
              AxisGrid(2 * f.xigrid.n, f.xigrid.delta / 2.0));
  TfArray bigspec(big.xgrid.dual(), big.xigrid.dual());
  const int ox = f.xgrid.n / 2, oxi = f.xigrid.n / 2;
  for (int i = 0; i < f.xgrid.n; ++i)
    for (int j = 0; j < f.xigrid.n; ++j) bigspec.at(i + ox, j + oxi) = spec.at(i, j);
  // synthesize on the fine grid
  centered_ft_axis(bigspec.v, big.xigrid, bigspec.xgrid.n, bigspec.xigrid.n, 1, false);
  centered_ft_axis(bigspec.v, big.xgrid, bigspec.xigrid.n, 1, bigspec.xigrid.n, false);
  bigspec.xgrid = big.xgrid;
  bigspec.xigrid = big.xigrid;
  return bigspec;
}

} // namespace detail
} // namespace tfb
