#pragma once

#include <cstdio>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "tfb/norms.hpp"

namespace tfb {

// The six exponents of the Wigner bound ||W(f1,f2)||_{M^{p,q}} <=
// C ||f1||_{M^{p1,q1}} ||f2||_{M^{p2,q2}}.
struct IndexTuple {
  ExtReal p1{2}, q1{2}, p2{2}, q2{2}, p{2}, q{2};

  std::string str() const {
    return "(" + p1.str() + "," + q1.str() + "," + p2.str() + "," + q2.str() + ";" + p.str() +
           "," + q.str() + ")";
  }
};

struct ConditionReport {
  bool bounded = false;
  std::vector<std::string> failures;
};

// bounded <=> (p1,q1,p2,q2 <= q) and 1/p1+1/p2 >= 1/p+1/q and 1/q1+1/q2 >= 1/p+1/q,
// evaluated in exact rational arithmetic with 1/inf = 0.
inline ConditionReport check_conditions(const IndexTuple& t) {
  ConditionReport r;
  if (!(t.p1 <= t.q)) r.failures.push_back("p1 <= q");
  if (!(t.q1 <= t.q)) r.failures.push_back("q1 <= q");
  if (!(t.p2 <= t.q)) r.failures.push_back("p2 <= q");
  if (!(t.q2 <= t.q)) r.failures.push_back("q2 <= q");
  Rational target = t.p.reciprocal() + t.q.reciprocal();
  if (!(t.p1.reciprocal() + t.p2.reciprocal() >= target))
    r.failures.push_back("1/p1 + 1/p2 >= 1/p + 1/q");
  if (!(t.q1.reciprocal() + t.q2.reciprocal() >= target))
    r.failures.push_back("1/q1 + 1/q2 >= 1/p + 1/q");
  r.bounded = r.failures.empty();
  return r;
}

enum class WitnessFamily {
  diagonal,     // W(phi_l, phi_l): probes the 1/p-sum and 1/q-sum conditions
  off_diagonal, // W(phi, phi_l) in both orientations: probes p_i,q_i <= q
};

inline const char* family_name(WitnessFamily f) {
  return f == WitnessFamily::diagonal ? "diagonal" : "off-diagonal";
}

struct SlopePair {
  Rational at_zero;
  Rational at_infinity;
};

// Exact tail slopes of the ratio R(l) = ||W||_{M^{p,q}} / (||.||_{M^{p1,q1}} ||.||_{M^{p2,q2}})
// on the chosen witness family, assembled from the closed-form norm
// asymptotics. The off-diagonal family takes the extremal slope over both
// orientations (conjugate symmetry swaps the roles of (p1,q1) and (p2,q2)).
inline SlopePair predicted_ratio_slopes(const IndexTuple& t, WitnessFamily family, int d = 1) {
  const Rational half(1, 2);
  const Rational dh = Rational(d) * half;
  const Rational ip = t.p.reciprocal(), iq = t.q.reciprocal();
  const Rational ip1 = t.p1.reciprocal(), iq1 = t.q1.reciprocal();
  const Rational ip2 = t.p2.reciprocal(), iq2 = t.q2.reciprocal();
  if (family == WitnessFamily::diagonal) {
    return {dh * (ip1 + ip2 - ip - iq), dh * (ip + iq - iq1 - iq2)};
  }
  Rational a0 = dh * (ip2 - iq), b0 = dh * (ip1 - iq);
  Rational ai = dh * (iq - iq2), bi = dh * (iq - iq1);
  return {std::min(a0, b0), std::max(ai, bi)};
}

enum class SweepVerdict { bounded, unbounded_at_zero, unbounded_at_infinity };

inline const char* verdict_name(SweepVerdict v) {
  switch (v) {
    case SweepVerdict::bounded: return "Bounded";
    case SweepVerdict::unbounded_at_zero: return "UnboundedAtZero";
    default: return "UnboundedAtInfinity";
  }
}

inline constexpr double kSlopeTol = 0.05;

struct SweepReport {
  IndexTuple tuple;
  WitnessFamily family = WitnessFamily::off_diagonal;
  std::vector<double> lambdas;
  std::vector<double> ratios; // off-diagonal: max over the two orientations
  double slope_zero = 0.0;
  double slope_infinity = 0.0;
  double predicted_zero = 0.0;
  double predicted_infinity = 0.0;
  SweepVerdict verdict = SweepVerdict::bounded;
};

struct SweepResolution {
  AxisGrid grid{1024, 1.0 / 32.0};
};

namespace detail {

// geometric grid 2^a .. 2^b
inline std::vector<double> geometric_lambdas(double lmin, double lmax, int points) {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(points));
  for (int k = 0; k < points; ++k)
    out.push_back(lmin * std::pow(lmax / lmin, static_cast<double>(k) / (points - 1)));
  return out;
}

inline void guard_lambda(double lambda, const AxisGrid& g, const char* what) {
  const double lo = 16.0 / (g.extent() * g.extent());
  const double dual_extent = g.n / g.extent();
  const double hi = dual_extent * dual_extent / 16.0;
  if (lambda < lo || lambda > hi)
    fail(errc::resolution_insufficient,
         std::string(what) + ": lambda " + std::to_string(lambda) +
             " outside representable range [" + std::to_string(lo) + ", " + std::to_string(hi) +
             "] for this grid");
}

// least-squares slope of ln(ratio) against ln(lambda)
inline double fit_slope(const std::vector<double>& ls, const std::vector<double>& rs) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = static_cast<int>(ls.size());
  for (int i = 0; i < n; ++i) {
    double x = std::log(ls[static_cast<size_t>(i)]);
    double y = std::log(rs[static_cast<size_t>(i)]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// process-wide cache of sweep norms; the regression set shares most of them
class NormCache {
public:
  static NormCache& instance() {
    static NormCache c;
    return c;
  }
  bool get(const std::string& key, double& out) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void put(const std::string& key, double v) {
    std::lock_guard<std::mutex> lock(mu_);
    map_[key] = v;
  }

private:
  std::mutex mu_;
  std::map<std::string, double> map_;
};

inline std::string norm_key(const char* kind, const AxisGrid& g, double lambda, const ExtReal& p,
                            const ExtReal& q) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s|%d|%.17g|%.17g|%s|%s", kind, g.n, g.delta, lambda,
                p.str().c_str(), q.str().c_str());
  return buf;
}

inline double cached_phi_norm(double lambda, const ExtReal& r, const ExtReal& s, const AxisGrid& g) {
  std::string key = norm_key("phi", g, lambda, r, s);
  double v;
  if (NormCache::instance().get(key, v)) return v;
  v = modulation_norm(gaussian(lambda, g), r, s, 0.0);
  NormCache::instance().put(key, v);
  return v;
}

inline double cached_wigner_offdiag_norm(double lambda, const ExtReal& p, const ExtReal& q,
                                         const AxisGrid& g) {
  std::string key = norm_key("W", g, lambda, p, q);
  double v;
  if (NormCache::instance().get(key, v)) return v;
  v = wigner_norm_production(gaussian(1.0, g), gaussian(lambda, g), p, q, 0.0);
  NormCache::instance().put(key, v);
  return v;
}

// ||W(phi_l,phi_l)||_{M^{p,q}} = 2^{d/2} l^{-d/2} ||phi_{2l}||_{M^{p,q}} ||phi_{2/l}||_{M^{p,q}}
// (tensor factorization of the separable Gaussian, d = 1), with the 1D norms
// computed numerically.
inline double diagonal_wigner_norm(double lambda, const ExtReal& p, const ExtReal& q,
                                   const AxisGrid& g) {
  return std::sqrt(2.0 / lambda) * cached_phi_norm(2.0 * lambda, p, q, g) *
         cached_phi_norm(2.0 / lambda, p, q, g);
}

} // namespace detail

// Dilation sweep of the ratio R(lambda) on a witness family; slopes are fitted
// on the tails (4 points each end when available) and compared against the
// rational-arithmetic prediction.
inline SweepReport sweep(const IndexTuple& t, WitnessFamily family,
                         const std::vector<double>& lambdas,
                         const SweepResolution& res = SweepResolution{}) {
  if (lambdas.size() < 6)
    fail(errc::invalid_input, "sweep: need a geometric lambda grid with >= 6 points");
  double lmin = lambdas.front(), lmax = lambdas.back();
  for (double l : lambdas) {
    lmin = std::min(lmin, l);
    lmax = std::max(lmax, l);
  }
  if (lmax / lmin < 1024.0 * (1.0 - 1e-9))
    fail(errc::invalid_input, "sweep: lambda grid must span at least a 2^10 dynamic range");
  const AxisGrid& g = res.grid;
  for (double l : lambdas) {
    detail::guard_lambda(l, g, "sweep");
    if (family == WitnessFamily::diagonal) {
      detail::guard_lambda(2.0 * l, g, "sweep(diagonal numerator)");
      detail::guard_lambda(2.0 / l, g, "sweep(diagonal numerator)");
    }
  }

  std::vector<double> sorted(lambdas);
  std::sort(sorted.begin(), sorted.end());

  SweepReport rep;
  rep.tuple = t;
  rep.family = family;
  rep.lambdas = sorted;
  SlopePair pred = predicted_ratio_slopes(t, family);
  rep.predicted_zero = pred.at_zero.to_double();
  rep.predicted_infinity = pred.at_infinity.to_double();

  std::vector<double> ra, rb; // orientation A and (off-diagonal only) B
  for (double l : sorted) {
    if (family == WitnessFamily::diagonal) {
      double num = detail::diagonal_wigner_norm(l, t.p, t.q, g);
      double den = detail::cached_phi_norm(l, t.p1, t.q1, g) *
                   detail::cached_phi_norm(l, t.p2, t.q2, g);
      ra.push_back(num / den);
    } else {
      double num = detail::cached_wigner_offdiag_norm(l, t.p, t.q, g);
      double denA = detail::cached_phi_norm(1.0, t.p1, t.q1, g) *
                    detail::cached_phi_norm(l, t.p2, t.q2, g);
      double denB = detail::cached_phi_norm(l, t.p1, t.q1, g) *
                    detail::cached_phi_norm(1.0, t.p2, t.q2, g);
      ra.push_back(num / denA);
      rb.push_back(num / denB);
    }
  }
  rep.ratios.resize(sorted.size());
  for (size_t i = 0; i < sorted.size(); ++i)
    rep.ratios[i] = rb.empty() ? ra[i] : std::max(ra[i], rb[i]);

  const int m = static_cast<int>(sorted.size());
  const int k = m >= 8 ? 4 : 3;
  auto head = [&](const std::vector<double>& v) {
    return std::vector<double>(v.begin(), v.begin() + k);
  };
  auto tail = [&](const std::vector<double>& v) {
    return std::vector<double>(v.end() - k, v.end());
  };
  double s0 = detail::fit_slope(head(sorted), head(ra));
  double si = detail::fit_slope(tail(sorted), tail(ra));
  if (!rb.empty()) {
    s0 = std::min(s0, detail::fit_slope(head(sorted), head(rb)));
    si = std::max(si, detail::fit_slope(tail(sorted), tail(rb)));
  }
  rep.slope_zero = s0;
  rep.slope_infinity = si;

  if (rep.slope_zero < -kSlopeTol) rep.verdict = SweepVerdict::unbounded_at_zero;
  else if (rep.slope_infinity > kSlopeTol) rep.verdict = SweepVerdict::unbounded_at_infinity;
  else rep.verdict = SweepVerdict::bounded;
  return rep;
}

inline std::vector<double> default_sweep_lambdas() {
  return detail::geometric_lambdas(std::pow(2.0, -5), std::pow(2.0, 5), 11);
}

// Theorem-3.3 style symmetric weighted ratio
//   ||W(f1,f2)||_{M^{p,q}_{1 (x) v_s}} /
//   ( ||f1||_{M^{p1,q1}} ||f2||_{M^{p2,q2}_{v_s}} + ||f1||_{M^{p1,q1}_{v_s}} ||f2||_{M^{p2,q2}} ).
inline double verify_symmetric_weighted_bound(const SampledSignal& f1, const SampledSignal& f2,
                                              const IndexTuple& t, double s) {
  if (s < 0.0)
    fail(errc::negative_weight_order, "verify_symmetric_weighted_bound: requires s >= 0");
  if (!check_conditions(t).bounded)
    fail(errc::index_condition_violated,
         "verify_symmetric_weighted_bound: tuple fails the boundedness conditions");
  double num = detail::wigner_norm_production(f1, f2, t.p, t.q, s);
  double den = modulation_norm(f1, t.p1, t.q1, 0.0) * modulation_norm(f2, t.p2, t.q2, s) +
               modulation_norm(f1, t.p1, t.q1, s) * modulation_norm(f2, t.p2, t.q2, 0.0);
  return num / den;
}

} // namespace tfb
