#include "hecke/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "hecke/error.hpp"

namespace hecke {

long euler_phi(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "euler_phi of non-positive value");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::mutex g_poly_mutex;
std::map<long, std::unique_ptr<std::vector<Integer>>> g_poly_cache;

// Exact division of integer polynomials where the divisor is monic.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  std::size_t dn = den.size() - 1;
  std::vector<Integer> quot(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer lead = num[i];
    quot[i - dn] = lead;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) HECKE_ASSERT(num[i] == 0, "cyclotomic division not exact");
  return quot;
}

const std::vector<Integer>& cyclotomic_locked(long n) {
  auto it = g_poly_cache.find(n);
  if (it != g_poly_cache.end()) return *it->second;
  std::vector<Integer> poly(static_cast<std::size_t>(n) + 1, Integer(0));
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (long k = 1; k < n; ++k) {
    if (n % k == 0) poly = divide_monic(std::move(poly), cyclotomic_locked(k));
  }
  auto& slot = g_poly_cache[n];
  slot = std::make_unique<std::vector<Integer>>(std::move(poly));
  return *slot;
}

}  // namespace

const std::vector<Integer>& cyclotomic_poly(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(g_poly_mutex);
  return cyclotomic_locked(n);
}

CycloElement::CycloElement(long order)
    : order_(order), coeffs_(static_cast<std::size_t>(euler_phi(order)), Rational(0)) {}

CycloElement::CycloElement(long order, std::vector<Rational> coeffs) : order_(order) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
  coeffs_ = reduce(order, std::move(coeffs));
}

std::vector<Rational> CycloElement::reduce(long order, std::vector<Rational> poly) {
  const auto& phi_poly = cyclotomic_poly(order);
  std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    Rational lead = poly[i];
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= lead * phi_poly[j];
  }
  poly.resize(deg, Rational(0));
  return poly;
}

CycloElement CycloElement::constant(long order, const Rational& value) {
  CycloElement e(order);
  e.coeffs_[0] = value;
  return e;
}

CycloElement CycloElement::zeta_power(long order, long exponent) {
  long e = ((exponent % order) + order) % order;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly[static_cast<std::size_t>(e)] = 1;
  return CycloElement(order, std::move(poly));
}

bool CycloElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool CycloElement::is_integral() const {
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

CycloElement CycloElement::lift(long target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) {
    throw Error(ErrorKind::InvalidArgument, "cannot lift order " + std::to_string(order_) +
                                                " to " + std::to_string(target));
  }
  long step = target / order_;
  std::vector<Rational> poly(coeffs_.size() * static_cast<std::size_t>(step), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * static_cast<std::size_t>(step)] = coeffs_[i];
  return CycloElement(target, std::move(poly));
}

std::complex<double> CycloElement::to_complex() const {
  std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(order_));
  std::complex<double> acc = 0.0;
  std::complex<double> pw = 1.0;
  for (const auto& c : coeffs_) {
    acc += c.get_d() * pw;
    pw *= z;
  }
  return acc;
}

std::string CycloElement::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].get_str() + ")";
    if (i > 0) s += "*z" + std::to_string(order_) + "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

CycloElement CycloElement::operator-() const {
  CycloElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloElement& CycloElement::operator+=(const CycloElement& y) {
  if (y.order_ != order_) {
    long l = std::lcm(order_, y.order_);
    *this = lift(l);
    return *this += y.lift(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += y.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& y) { return *this += -y; }

CycloElement& CycloElement::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CycloElement operator*(const CycloElement& x, const CycloElement& y) {
  if (x.order_ != y.order_) {
    long l = std::lcm(x.order_, y.order_);
    return x.lift(l) * y.lift(l);
  }
  std::vector<Rational> poly(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) poly[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return CycloElement(x.order_, std::move(poly));
}

bool operator==(const CycloElement& x, const CycloElement& y) {
  if (x.order_ == y.order_) return x.coeffs_ == y.coeffs_;
  long l = std::lcm(x.order_, y.order_);
  return x.lift(l).coeffs_ == y.lift(l).coeffs_;
}

}  // namespace hecke
