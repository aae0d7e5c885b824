#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "tfb/extreal.hpp"
#include "tfb/signal.hpp"

namespace tfb {

// Generalized Gaussian on the phase plane:
//   A * exp(-pi a x^2) * exp(-pi b xi^2) * exp(2pi i c x xi).
// Numerics run at d = 1; d stays a parameter of the closed forms.
struct GenGaussian {
  double amplitude = 1.0;
  double a = 1.0;
  double b = 1.0;
  double c = 0.0;
  int d = 1;

  GenGaussian() = default;
  GenGaussian(double amp, double a_, double b_, double c_, int d_ = 1)
      : amplitude(amp), a(a_), b(b_), c(c_), d(d_) {
    if (!(a > 0.0) || !(b > 0.0))
      fail(errc::invalid_input, "GenGaussian: decay parameters a,b must be positive");
    if (!(amplitude > 0.0)) fail(errc::invalid_input, "GenGaussian: amplitude must be positive");
  }

  cplx eval(double x, double xi) const {
    return amplitude * std::exp(-pi * (a * x * x + b * xi * xi)) *
           std::polar(1.0, 2.0 * pi * c * x * xi);
  }
};

// Coefficients of W(phi, phi_lambda); kept as a named triple because the
// sharpness experiments reference them individually.
struct WignerGaussCoeffs {
  double lambda;
  double a_lambda;
  double b_lambda;
  double c_lambda;
  double amplitude; // 2^d / (1+lambda)^{d/2}

  WignerGaussCoeffs(double lam, int d = 1) : lambda(lam) {
    if (!(lam > 0.0)) fail(errc::non_positive_lambda, "WignerGaussCoeffs: lambda must be positive");
    a_lambda = 4.0 * lam / (1.0 + lam);
    b_lambda = 4.0 / (1.0 + lam);
    c_lambda = 2.0 * (1.0 - lam) / (1.0 + lam);
    amplitude = std::pow(2.0, d) / std::pow(1.0 + lam, 0.5 * d);
  }
};

// W(phi, phi_lambda) as a closed-form generalized Gaussian.
inline GenGaussian wigner_gaussian_pair(double lambda, int d = 1) {
  WignerGaussCoeffs w(lambda, d);
  return GenGaussian(w.amplitude, w.a_lambda, w.b_lambda, w.c_lambda, d);
}

// W(phi_lambda, phi_lambda)(x,xi) = 2^{d/2} lambda^{-d/2} phi_{2 lambda}(x) phi_{2/lambda}(xi),
// i.e. the separable chirp-free Gaussian with factors (2 lambda, 2/lambda).
inline GenGaussian wigner_gaussian_diag(double lambda, int d = 1) {
  if (!(lambda > 0.0)) fail(errc::non_positive_lambda, "wigner_gaussian_diag: lambda must be positive");
  double amp = std::pow(2.0 / lambda, 0.5 * d);
  return GenGaussian(amp, 2.0 * lambda, 2.0 / lambda, 0.0, d);
}

// STFT of a generalized Gaussian against the window Phi(x,xi) = e^{-pi(x^2+xi^2)},
// evaluated exactly (prefactor, real Gaussian exponent and phase).
inline cplx stft_gen_gaussian(const GenGaussian& g, std::pair<double, double> z,
                              std::pair<double, double> zeta) {
  const double a = g.a, b = g.b, c = g.c;
  const double D = (a + 1.0) * (b + 1.0) + c * c;
  const auto [z1, z2] = z;
  const auto [zeta1, zeta2] = zeta;
  const double quad = (a * (b + 1.0) + c * c) * z1 * z1 + ((a + 1.0) * b + c * c) * z2 * z2 +
                      (b + 1.0) * zeta1 * zeta1 + (a + 1.0) * zeta2 * zeta2 -
                      2.0 * c * (z1 * zeta2 + z2 * zeta1);
  const double phase = -(2.0 * pi / (a + 1.0)) *
                       (z1 * zeta1 + (c * z1 - (a + 1.0) * zeta2) * (c * zeta1 + (a + 1.0) * z2) / D);
  return g.amplitude * std::pow(D, -0.5 * g.d) * std::exp(-pi * quad / D) * std::polar(1.0, phase);
}

// Closed-form M^{p,q} norm of a generalized Gaussian, correct up to a constant
// independent of (a,b,c); the exact constant for window e^{-pi|w|^2} is
// p^{-d/p} q^{-d/q} (by direct integration), so callers work with ratios.
inline double mod_norm_gen_gaussian(const GenGaussian& g, const ExtReal& p, const ExtReal& q) {
  const double a = g.a, b = g.b, c = g.c;
  const int d = g.d;
  const double ip = p.reciprocal().to_double();
  const double iq = q.reciprocal().to_double();
  const double D = (a + 1.0) * (b + 1.0) + c * c;
  const double f1 = std::pow(D, d * ip + d * iq - 0.5 * d);
  const double f2 =
      std::pow((c * c + a * b + a) * (c * c + a * b + b), 0.5 * d * iq - 0.5 * d * ip);
  const double g1 = std::pow(b * b * (a + 1.0) + b * (c * c + a + 1.0), 0.5 * d * iq);
  const double g2 = std::pow(a * a * (b + 1.0) + a * (c * c + b + 1.0), 0.5 * d * iq);
  return f1 * f2 / (g1 * g2);
}

// ||W(phi, phi_lambda)||_{M^{p,q}} up to constants:
//   [(2l+1)(l+2)]^{d/2q - d/2p} / ( l^{d/2q} (1+l)^{d/2 - d/p} ).
inline double wigner_mixed_norm_asymptotic(double lambda, const ExtReal& p, const ExtReal& q,
                                           int d = 1) {
  if (!(lambda > 0.0))
    fail(errc::non_positive_lambda, "wigner_mixed_norm_asymptotic: lambda must be positive");
  const double ip = p.reciprocal().to_double();
  const double iq = q.reciprocal().to_double();
  const double num = std::pow((2.0 * lambda + 1.0) * (lambda + 2.0), 0.5 * d * iq - 0.5 * d * ip);
  const double den = std::pow(lambda, 0.5 * d * iq) * std::pow(1.0 + lambda, 0.5 * d - d * ip);
  return num / den;
}

// ||phi_lambda||_{M^{r,s}} up to constants: lambda^{-d/2r} (lambda+1)^{-(d/2)(1-1/r-1/s)}.
// The (r,s) reading of the paper's display, validated numerically in the tests.
inline double gaussian_mod_norm_asymptotic(double lambda, const ExtReal& r, const ExtReal& s,
                                           int d = 1) {
  if (!(lambda > 0.0))
    fail(errc::non_positive_lambda, "gaussian_mod_norm_asymptotic: lambda must be positive");
  const double ir = r.reciprocal().to_double();
  const double is = s.reciprocal().to_double();
  return std::pow(lambda, -0.5 * d * ir) * std::pow(lambda + 1.0, -0.5 * d * (1.0 - ir - is));
}

// Exact log-log tail slopes, in rational arithmetic.
// ||W(phi,phi_lambda)||_{M^{p,q}}: lambda -> 0 slope -d/(2q); lambda -> inf slope d(1/(2q) - 1/2).
inline std::pair<Rational, Rational> wigner_norm_slopes(const ExtReal& p, const ExtReal& q, int d = 1) {
  (void)p; // the limits depend on q only; p cancels between the factors
  Rational iq = q.reciprocal();
  Rational half(1, 2);
  Rational slope0 = -(Rational(d) * iq * half);
  Rational slope_inf = Rational(d) * (iq * half - half);
  return {slope0, slope_inf};
}

// ||phi_lambda||_{M^{r,s}}: lambda -> 0 slope -d/(2r); lambda -> inf slope d(1/(2s) - 1/2).
inline std::pair<Rational, Rational> gaussian_norm_slopes(const ExtReal& r, const ExtReal& s, int d = 1) {
  Rational half(1, 2);
  Rational slope0 = -(Rational(d) * r.reciprocal() * half);
  Rational slope_inf = Rational(d) * (s.reciprocal() * half - half);
  return {slope0, slope_inf};
}

} // namespace tfb
