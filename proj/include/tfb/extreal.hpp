#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "tfb/errors.hpp"

namespace tfb {

// Exact rational arithmetic for the exponent algebra (index conditions and
// predicted slopes must not drift in floating point).
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) fail(errc::invalid_input, "Rational: zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) fail(errc::invalid_input, "Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational operator-() const { return Rational(-num, den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

// Lebesgue exponent in [1, inf]; infinity follows the rule 1/inf = 0.
class ExtReal {
public:
  ExtReal() : finite_(Rational(1)) {}
  static ExtReal infinity() {
    ExtReal e;
    e.finite_.reset();
    return e;
  }
  ExtReal(const Rational& r) : finite_(r) { check(); }
  ExtReal(long long n) : finite_(Rational(n)) { check(); }
  ExtReal(long long n, long long d) : finite_(Rational(n, d)) { check(); }

  // Accepts "inf", integers ("2") and rationals ("4/3").
  static ExtReal parse(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF" || s == "oo") return infinity();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        size_t pos = 0;
        long long n = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return ExtReal(Rational(n));
      }
      size_t p1 = 0, p2 = 0;
      long long n = std::stoll(s.substr(0, slash), &p1);
      long long d = std::stoll(s.substr(slash + 1), &p2);
      if (p1 != slash || p2 != s.size() - slash - 1) throw std::invalid_argument(s);
      return ExtReal(Rational(n, d));
    } catch (const error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::invalid_input, "ExtReal: cannot parse exponent '" + s + "'");
    }
  }

  bool is_infinite() const { return !finite_.has_value(); }

  // 1/p with 1/inf = 0; always a finite rational in [0,1].
  Rational reciprocal() const {
    if (is_infinite()) return Rational(0);
    return Rational(finite_->den, finite_->num);
  }

  double to_double() const {
    return is_infinite() ? std::numeric_limits<double>::infinity() : finite_->to_double();
  }

  const Rational& rational() const {
    if (is_infinite()) fail(errc::exponent_out_of_range, "ExtReal: infinite exponent");
    return *finite_;
  }

  std::string str() const { return is_infinite() ? "inf" : finite_->str(); }

  // p <= q in the extended order.
  friend bool operator<=(const ExtReal& a, const ExtReal& b) {
    if (b.is_infinite()) return true;
    if (a.is_infinite()) return false;
    return *a.finite_ <= *b.finite_;
  }
  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.finite_ == *b.finite_;
  }

private:
  void check() {
    if (finite_ && *finite_ < Rational(1))
      fail(errc::exponent_out_of_range, "ExtReal: exponent must be >= 1, got " + finite_->str());
  }
  std::optional<Rational> finite_;
};

inline const ExtReal ext_inf = ExtReal::infinity();

} // namespace tfb
