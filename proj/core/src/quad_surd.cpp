#include "hecke/quad_surd.hpp"

#include <cmath>

#include "hecke/error.hpp"

namespace hecke {

namespace {

Integer common_d(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational() || x.d() == y.d()) return x.d();
  throw Error(ErrorKind::InvalidArgument,
              "surds from different fields: d=" + x.d().get_str() + " and d=" + y.d().get_str());
}

}  // namespace

QuadSurd::QuadSurd(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_ == 0) throw Error(ErrorKind::InvalidArgument, "surd with zero denominator");
  if (d_ <= 1) throw Error(ErrorKind::InvalidArgument, "surd radicand must exceed 1");
  normalize();
}

void QuadSurd::normalize() {
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

QuadSurd QuadSurd::from_parts(const Rational& p, const Rational& r, const Integer& d) {
  Integer c;
  mpz_lcm(c.get_mpz_t(), p.get_den_mpz_t(), r.get_den_mpz_t());
  Integer a = p.get_num() * (c / p.get_den());
  Integer b = r.get_num() * (c / r.get_den());
  return QuadSurd(a, b, c, d);
}

QuadSurd QuadSurd::rational(const Rational& p, const Integer& d) {
  return QuadSurd(p.get_num(), 0, p.get_den(), d);
}

Rational QuadSurd::norm() const { return make_rational(a_ * a_ - b_ * b_ * d_, c_ * c_); }

Rational QuadSurd::trace() const { return make_rational(2 * a_, c_); }

int QuadSurd::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d; equality is impossible for squarefree d.
  int cmp_sq = cmp(Integer(a_ * a_), Integer(b_ * b_ * d_));
  return cmp_sq > 0 ? sa : sb;
}

Integer QuadSurd::floor() const {
  if (b_ == 0) return floor_div(a_, c_);
  Integer s = isqrt(Integer(b_ * b_ * d_));
  Integer t = a_ + (b_ > 0 ? s : Integer(-s - 1));
  return floor_div(t, c_);
}

Integer QuadSurd::ceil() const {
  if (b_ == 0) return ceil_div(a_, c_);
  return floor() + 1;
}

double QuadSurd::to_double() const {
  return (a_.get_d() + b_.get_d() * std::sqrt(d_.get_d())) / c_.get_d();
}

std::string QuadSurd::to_string() const {
  std::string s = "(" + a_.get_str();
  if (b_ != 0) {
    s += (b_ < 0 ? "-" : "+");
    Integer ab = abs(b_);
    if (ab != 1) s += ab.get_str() + "*";
    s += "sqrt(" + d_.get_str() + ")";
  }
  s += ")";
  if (c_ != 1) s += "/" + c_.get_str();
  return s;
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  Integer d = common_d(x, y);
  return QuadSurd(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  Integer d = common_d(x, y);
  return QuadSurd(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, d);
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
  if (y.a_ == 0 && y.b_ == 0) throw Error(ErrorKind::InvalidArgument, "surd division by zero");
  Integer d = common_d(x, y);
  // x / y = x * conj(y) / N(y), with N(y) * c_y^2 = a_y^2 - b_y^2 d.
  Integer n = y.a_ * y.a_ - y.b_ * y.b_ * d;
  QuadSurd num(x.a_ * y.a_ - x.b_ * y.b_ * d, x.b_ * y.a_ - x.a_ * y.b_, x.c_, d);
  return QuadSurd(num.a_ * y.c_, num.b_ * y.c_, num.c_ * n, d);
}

int surd_sign(const QuadSurd& x) { return x.sign(); }

}  // namespace hecke
