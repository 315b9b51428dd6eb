#pragma once

#include <string>

#include "hecke/rational.hpp"

namespace hecke {

/// Exact element (a + b*sqrt(d)) / c of a real quadratic field.
///
/// Stored normalized: c > 0 and gcd(a, b, c) = 1. A value with b = 0 is
/// rational and can combine with surds of any d.
class QuadSurd {
 public:
  QuadSurd() : a_(0), b_(0), c_(1), d_(2) {}
  QuadSurd(Integer a, Integer b, Integer c, Integer d);

  /// p + r*sqrt(d).
  static QuadSurd from_parts(const Rational& p, const Rational& r, const Integer& d);
  static QuadSurd rational(const Rational& p, const Integer& d);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  Rational rational_part() const { return make_rational(a_, c_); }
  Rational surd_coeff() const { return make_rational(b_, c_); }
  bool is_rational() const { return b_ == 0; }

  QuadSurd conj() const { return QuadSurd(a_, -b_, c_, d_); }
  Rational norm() const;
  Rational trace() const;

  /// Exact sign of the real value under sqrt(d) > 0.
  int sign() const;
  Integer floor() const;
  Integer ceil() const;

  /// Non-authoritative approximation for display only.
  double to_double() const;
  std::string to_string() const;

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);
  QuadSurd operator-() const { return QuadSurd(-a_, -b_, c_, d_); }

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator!=(const QuadSurd& x, const QuadSurd& y) { return !(x == y); }

  /// Value comparisons.
  friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() > 0; }

 private:
  void normalize();

  Integer a_, b_, c_, d_;
};

int surd_sign(const QuadSurd& x);

inline QuadSurd operator+(const QuadSurd& x, const Rational& r) {
  return x + QuadSurd::rational(r, x.d());
}
inline QuadSurd operator-(const QuadSurd& x, const Rational& r) {
  return x - QuadSurd::rational(r, x.d());
}
inline QuadSurd operator*(const QuadSurd& x, const Rational& r) {
  return x * QuadSurd::rational(r, x.d());
}

}  // namespace hecke
