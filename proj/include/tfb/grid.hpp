#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "tfb/errors.hpp"

namespace tfb {

// Origin-centered uniform 1D grid: node k sits at (k - n/2)*delta, k = 0..n-1.
// n is an even power of two so that the centered FFT phase factors reduce to
// (-1)^k (n divisible by 4) and so refinement/padding keeps the invariant.
struct AxisGrid {
  int n = 0;
  double delta = 0.0;

  AxisGrid() = default;
  AxisGrid(int n_, double delta_) : n(n_), delta(delta_) {
    if (n < 8 || (n & (n - 1)) != 0)
      fail(errc::invalid_input, "AxisGrid: n must be a power of two >= 8, got " + std::to_string(n_));
    if (!(delta > 0.0))
      fail(errc::invalid_input, "AxisGrid: delta must be positive");
  }

  double node(int k) const { return (k - n / 2) * delta; }
  double extent() const { return n * delta; }

  // Dual grid under the 2*pi-free Fourier convention: spacing 1/extent, same n,
  // also origin-centered.
  AxisGrid dual() const { return AxisGrid(n, 1.0 / extent()); }

  // Index of the node equal to x, if x is on-grid (|x - node| <= tol*delta).
  bool index_of(double x, int& k, double tol = 1e-9) const {
    double idx = x / delta + n / 2;
    double rounded = std::round(idx);
    if (std::abs(idx - rounded) > tol) return false;
    int ki = static_cast<int>(rounded);
    if (ki < 0 || ki >= n) return false;
    k = ki;
    return true;
  }

  bool operator==(const AxisGrid& o) const { return n == o.n && delta == o.delta; }
  bool operator!=(const AxisGrid& o) const { return !(*this == o); }
};

inline void require_same_grid(const AxisGrid& a, const AxisGrid& b, const char* where) {
  if (a != b) fail(errc::grid_mismatch, std::string(where) + ": grids differ");
}

} // namespace tfb
