#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "rank2ec/rational.hpp"

namespace rank2ec {

namespace detail {

/// Exact sign of d - c*sqrt(q), q >= 0.  At most two squarings, no rounding.
inline int sign_minus_sqrt(const Rational& d, const Rational& c, const Rational& q) {
  if (q < 0) throw std::domain_error("sign_minus_sqrt: negative radicand");
  if (c == 0 || q == 0) return sign_of(d);
  const int sd = sign_of(d);
  const int sc = sign_of(c);  // sign of c*sqrt(q), as q > 0
  if (sd != sc) {
    if (sd > sc) return 1;
    return -1;
  }
  // Same strict sign on both sides: compare squares, flip when negative.
  const int s = sign_of(d * d - c * c * q);
  return sd > 0 ? s : -s;
}

}  // namespace detail

/// An exact number a + b*sqrt(q) with rational a, b and fixed radicand q >= 0.
/// Holds every threshold the geometry compares against (42 + 3*sqrt(3) and
/// friends), always on squared norms, so no square root is ever extracted.
struct QuadraticValue {
  Rational a;
  Rational b;
  Rational q;

  QuadraticValue() = default;
  QuadraticValue(Rational a_, Rational b_, Rational q_)
      : a(std::move(a_)), b(std::move(b_)), q(std::move(q_)) {
    if (q < 0) throw std::domain_error("QuadraticValue: radicand must be >= 0");
  }

  static QuadraticValue from_rational(Rational r) { return {std::move(r), 0, 0}; }

  int sign() const { return detail::sign_minus_sqrt(a, -b, q); }

  /// True when the two values may be combined exactly (same radicand, or one
  /// side has no irrational part).
  friend bool compatible(const QuadraticValue& x, const QuadraticValue& y) {
    return x.b == 0 || y.b == 0 || x.q == y.q;
  }

  friend QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y) {
    if (!compatible(x, y)) throw std::domain_error("QuadraticValue: radicand mismatch");
    return {x.a + y.a, x.b + y.b, x.b != 0 ? x.q : y.q};
  }
  friend QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y) {
    if (!compatible(x, y)) throw std::domain_error("QuadraticValue: radicand mismatch");
    return {x.a - y.a, x.b - y.b, x.b != 0 ? x.q : y.q};
  }
  friend QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y) {
    if (!compatible(x, y)) throw std::domain_error("QuadraticValue: radicand mismatch");
    const Rational& q = x.b != 0 ? x.q : y.q;
    return {x.a * y.a + x.b * y.b * q, x.a * y.b + x.b * y.a, q};
  }
  friend QuadraticValue operator*(const Rational& r, const QuadraticValue& x) {
    return {r * x.a, r * x.b, x.q};
  }
};

/// Exact sign of p - (t.a + t.b*sqrt(t.q)) as an ordering.
inline std::strong_ordering compare_rational_vs_quadratic(const Rational& p,
                                                          const QuadraticValue& t) {
  const int s = detail::sign_minus_sqrt(p - t.a, t.b, t.q);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare_quadratic(const QuadraticValue& x, const QuadraticValue& y) {
  if (!compatible(x, y)) throw std::domain_error("compare_quadratic: radicand mismatch");
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline bool rational_leq(const Rational& p, const QuadraticValue& t) {
  return compare_rational_vs_quadratic(p, t) != std::strong_ordering::greater;
}
inline bool rational_gt(const Rational& p, const QuadraticValue& t) {
  return compare_rational_vs_quadratic(p, t) == std::strong_ordering::greater;
}

inline std::string to_string(const QuadraticValue& t) {
  return to_string(t.a) + " + " + to_string(t.b) + "*sqrt(" + to_string(t.q) + ")";
}

}  // namespace rank2ec
