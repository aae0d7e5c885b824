#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include <fftw3.h>

#include "tfb/grid.hpp"

namespace tfb {

using cplx = std::complex<double>;

namespace detail {

// FFTW plans are process-global state; creation is not thread-safe, execution
// on distinct arrays is. Plans are cached per (n, sign) with FFTW_UNALIGNED so
// they can run on any caller buffer via the new-array interface.
class FftwPlanCache {
public:
  static FftwPlanCache& instance() {
    static FftwPlanCache c;
    return c;
  }

  void execute(cplx* data, int n, int sign) {
    fftw_plan p = plan_for(0, n, sign);
    fftw_complex* d = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, d, d);
  }

  // row-major n0 x n1
  void execute2d(cplx* data, int n0, int n1, int sign) {
    fftw_plan p = plan_for(n0, n1, sign);
    fftw_complex* d = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, d, d);
  }

private:
  FftwPlanCache() = default;
  ~FftwPlanCache() {
    for (auto& [key, p] : plans_) fftw_destroy_plan(p);
  }

  fftw_plan plan_for(int n0, int n1, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(n0, n1, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    scratch_.assign(static_cast<size_t>(std::max(n0, 1)) * static_cast<size_t>(n1), cplx{0.0, 0.0});
    fftw_complex* s = reinterpret_cast<fftw_complex*>(scratch_.data());
    fftw_plan p = n0 == 0 ? fftw_plan_dft_1d(n1, s, s, sign, FFTW_ESTIMATE | FFTW_UNALIGNED)
                          : fftw_plan_dft_2d(n0, n1, s, s, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, p);
    return p;
  }

  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
  std::vector<cplx> scratch_;
};

inline void dft_inplace(cplx* data, int n, int sign) {
  FftwPlanCache::instance().execute(data, n, sign);
}

inline void dft2_inplace(cplx* data, int n0, int n1, int sign) {
  FftwPlanCache::instance().execute2d(data, n0, n1, sign);
}

// Centered continuous-convention Fourier transform. `g` is always the
// spatial grid. forward: v holds samples on g, becomes samples of the
// transform on g.dual(), out_j = delta * sum_k f_k exp(-2pi i x_k xi_j).
// backward: v holds samples on g.dual(), becomes samples on g (synthesis,
// scale 1/extent). Both reduce to (-1)^j DFT[(-1)^k .] since n % 4 == 0.
inline void centered_ft_inplace(std::vector<cplx>& v, const AxisGrid& g, bool forward) {
  const int n = g.n;
  for (int k = 1; k < n; k += 2) v[static_cast<size_t>(k)] = -v[static_cast<size_t>(k)];
  dft_inplace(v.data(), n, forward ? FFTW_FORWARD : FFTW_BACKWARD);
  const double scale = forward ? g.delta : 1.0 / g.extent();
  for (int j = 0; j < n; ++j) {
    cplx val = v[static_cast<size_t>(j)] * scale;
    v[static_cast<size_t>(j)] = (j & 1) ? -val : val;
  }
}

// Strided variant used for the second axis of row-major 2D arrays.
inline void centered_ft_axis(std::vector<cplx>& a, const AxisGrid& g, int count, int stride,
                             int axis_stride, bool forward) {
  std::vector<cplx> tmp(static_cast<size_t>(g.n));
  for (int r = 0; r < count; ++r) {
    cplx* base = a.data() + static_cast<ptrdiff_t>(r) * stride;
    if (axis_stride == 1) {
      std::copy(base, base + g.n, tmp.begin());
      centered_ft_inplace(tmp, g, forward);
      std::copy(tmp.begin(), tmp.end(), base);
    } else {
      for (int k = 0; k < g.n; ++k) tmp[static_cast<size_t>(k)] = base[static_cast<ptrdiff_t>(k) * axis_stride];
      centered_ft_inplace(tmp, g, forward);
      for (int k = 0; k < g.n; ++k) base[static_cast<ptrdiff_t>(k) * axis_stride] = tmp[static_cast<size_t>(k)];
    }
  }
}

// Band-limited x2 upsampling of a centered sample vector: same extent, twice
// the nodes. Spectrum is embedded centered into the doubled dual grid. Valid
// for signals that have decayed at the Nyquist edge (Gaussian-family use).
inline std::vector<cplx> upsample2_centered(const std::vector<cplx>& v, const AxisGrid& g,
                                            AxisGrid& fine) {
  const int n = g.n;
  std::vector<cplx> spec(v);
  centered_ft_inplace(spec, g, true);
  fine = AxisGrid(2 * n, g.delta / 2.0);
  std::vector<cplx> pad(static_cast<size_t>(2 * n), cplx{0.0, 0.0});
  for (int j = 0; j < n; ++j) pad[static_cast<size_t>(j + n / 2)] = spec[static_cast<size_t>(j)];
  centered_ft_inplace(pad, fine, false);
  return pad;
}

} // namespace detail
} // namespace tfb
