#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "tfb/norms.hpp"

namespace tfb {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

namespace detail {

// Ci via the power series gamma + ln t + sum (-1)^k t^{2k} / (2k (2k)!).
inline double cosine_integral_series(double t) {
  double sum = 0.0;
  double term = 1.0; // t^{2k} / (2k)!
  const double t2 = t * t;
  for (int k = 1; k <= 60; ++k) {
    term *= t2 / ((2 * k - 1) * (2 * k));
    double contrib = ((k & 1) ? -1.0 : 1.0) * term / (2 * k);
    sum += contrib;
    if (std::abs(contrib) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return euler_gamma + std::log(t) + sum;
}

// Ci(t) = -Re E1(i t); E1 evaluated by the continued fraction
//   E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...))))
// (modified Lentz), which is how the sin/cos asymptotic auxiliaries reach
// full double precision for t > 8.
inline double cosine_integral_cf(double t) {
  const cplx z{0.0, t};
  const cplx one{1.0, 0.0};
  cplx b = z + one;
  const double tiny = 1e-290;
  cplx c{1.0 / tiny, 0.0};
  cplx d = one / b;
  cplx h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = one / (a * d + b);
    c = b + a / c;
    const cplx delta = c * d;
    h *= delta;
    if (std::abs(delta - one) < 1e-16) break;
  }
  const cplx e1 = h * std::exp(-z);
  return -e1.real();
}

} // namespace detail

// Cosine integral Ci(t), t > 0; absolute error below 1e-12 on both branches.
inline double cosine_integral(double t) {
  if (!(t > 0.0)) fail(errc::non_positive_argument, "cosine_integral: requires t > 0");
  return t <= 8.0 ? detail::cosine_integral_series(t) : detail::cosine_integral_cf(t);
}

// sigma_tau(x,xi) = (2^d / |2 tau - 1|^d) e^{2 pi i (2/(2 tau - 1)) x xi}, d = 1.
inline cplx tau_kernel_value(double tau, double x, double xi) {
  const double denom = 2.0 * tau - 1.0;
  return (2.0 / std::abs(denom)) * std::polar(1.0, 2.0 * pi * (2.0 / denom) * x * xi);
}

struct CohenKernel {
  enum class Kind { tau, born_jordan_d1, custom };
  Kind kind = Kind::custom;
  double tau = 0.0;
  TfArray custom;

  static CohenKernel make_tau(double tau) {
    if (!(tau >= 0.0 && tau <= 1.0) || tau == 0.5)
      fail(errc::tau_half, "tau kernel: tau must lie in [0,1] \\ {1/2}");
    CohenKernel k;
    k.kind = Kind::tau;
    k.tau = tau;
    return k;
  }
  static CohenKernel make_born_jordan() {
    CohenKernel k;
    k.kind = Kind::born_jordan_d1;
    return k;
  }
  static CohenKernel make_custom(TfArray a) {
    CohenKernel k;
    k.kind = Kind::custom;
    k.custom = std::move(a);
    return k;
  }
};

// Grid delta kernel: single-node mass 1/cell at the origin so convolution is
// the identity.
inline CohenKernel make_delta_kernel(const AxisGrid& gx, const AxisGrid& gxi) {
  TfArray d(gx, gxi);
  d.at(gx.n / 2, gxi.n / 2) = cplx{1.0 / (gx.delta * gxi.delta), 0.0};
  return CohenKernel::make_custom(std::move(d));
}

inline TfArray tau_kernel(double tau, const AxisGrid& gx, const AxisGrid& gxi) {
  if (!(tau >= 0.0 && tau <= 1.0) || tau == 0.5)
    fail(errc::tau_half, "tau_kernel: tau must lie in [0,1] \\ {1/2}");
  TfArray out(gx, gxi);
  for (int i = 0; i < gx.n; ++i)
    for (int j = 0; j < gxi.n; ++j) out.at(i, j) = tau_kernel_value(tau, gx.node(i), gxi.node(j));
  return out;
}

namespace detail {

// Born-Jordan samples with the axis singularity masked; masked nodes are
// filled by averaging available 4-neighbors (off-axis first, origin second).
inline TfArray born_jordan_array(const AxisGrid& gx, const AxisGrid& gxi) {
  TfArray out(gx, gxi);
  std::vector<char> masked(out.v.size(), 0);
  for (int i = 0; i < gx.n; ++i)
    for (int j = 0; j < gxi.n; ++j) {
      const double prod = std::abs(gx.node(i) * gxi.node(j));
      if (prod == 0.0) {
        masked[static_cast<size_t>(i) * gxi.n + j] = 1;
      } else {
        out.at(i, j) = cplx{-2.0 * cosine_integral(4.0 * pi * prod), 0.0};
      }
    }
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < gx.n; ++i)
      for (int j = 0; j < gxi.n; ++j) {
        const size_t idx = static_cast<size_t>(i) * gxi.n + j;
        if (!masked[idx]) continue;
        cplx acc{0.0, 0.0};
        int cnt = 0;
        auto take = [&](int a, int b) {
          if (a < 0 || a >= gx.n || b < 0 || b >= gxi.n) return;
          if (masked[static_cast<size_t>(a) * gxi.n + b]) return;
          acc += out.at(a, b);
          ++cnt;
        };
        take(i - 1, j);
        take(i + 1, j);
        take(i, j - 1);
        take(i, j + 1);
        if (cnt > 0) {
          out.at(i, j) = acc / static_cast<double>(cnt);
          masked[idx] = 2; // filled this pass; usable from the next pass on
          progress = true;
        }
      }
    for (auto& m : masked)
      if (m == 2) m = 0;
  }
  return out;
}

} // namespace detail

// Theta_sigma(z1,z2) = -2 Ci(4 pi |z1 z2|) off the axes (d = 1); axis nodes
// are filled by neighbor averaging (the Ci singularity there is integrable).
inline TfArray born_jordan_kernel_d1(const AxisGrid& gx, const AxisGrid& gxi) {
  return detail::born_jordan_array(gx, gxi);
}

// M(f,f) = W(f,f) * sigma. Analytic kernels (tau, Born-Jordan) are evaluated
// on the padded lattice; custom arrays are zero-padded.
inline TfArray cohen_distribution(const SampledSignal& f, const CohenKernel& kernel) {
  TfArray w = cross_wigner(f, f);
  switch (kernel.kind) {
    case CohenKernel::Kind::tau: {
      const double tau = kernel.tau;
      return detail::convolve2(
          w, [tau](double x, double xi) { return tau_kernel_value(tau, x, xi); });
    }
    case CohenKernel::Kind::born_jordan_d1: {
      TfArray padded = detail::born_jordan_array(AxisGrid(2 * w.xgrid.n, w.xgrid.delta),
                                                 AxisGrid(2 * w.xigrid.n, w.xigrid.delta));
      return detail::convolve2(w, [&padded](double x, double xi) {
        int i, j;
        if (padded.xgrid.index_of(x, i) && padded.xigrid.index_of(xi, j)) return padded.at(i, j);
        return cplx{0.0, 0.0};
      });
    }
    case CohenKernel::Kind::custom:
    default:
      return detail::convolve2(w, kernel.custom);
  }
}

// Theorem-1.3 index condition (1.12): 2 min(1/p1, 1/q1) >= 1/p + 1/q.
inline bool cohen_indices_admissible(const ExtReal& p1, const ExtReal& q1, const ExtReal& p,
                                     const ExtReal& q) {
  Rational m = std::min(p1.reciprocal(), q1.reciprocal());
  return Rational(2) * m >= p.reciprocal() + q.reciprocal();
}

// ||M(f,f)||_{M^{p,q}_{1 (x) v_s}} / ||f||^2_{M^{p1,q1}_{v_s}} under (1.12).
inline double cohen_bound_check(const SampledSignal& f, const CohenKernel& kernel,
                                const ExtReal& p1, const ExtReal& q1, const ExtReal& p,
                                const ExtReal& q, double s = 0.0) {
  if (s < 0.0) fail(errc::negative_weight_order, "cohen_bound_check: requires s >= 0");
  if (!cohen_indices_admissible(p1, q1, p, q))
    fail(errc::index_condition_violated,
         "cohen_bound_check: 2 min(1/p1,1/q1) >= 1/p + 1/q fails");
  TfArray m = cohen_distribution(f, kernel);
  double num = modulation_norm_phase_space(m, p, q, s);
  double den = modulation_norm(f, p1, q1, s);
  return num / (den * den);
}

} // namespace tfb
