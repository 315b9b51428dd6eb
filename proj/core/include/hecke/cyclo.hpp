#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

/// Euler phi for small positive arguments.
long euler_phi(long n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_poly(long n);

/// Exact element of Q(zeta_o) in the power basis 1, z, ..., z^(phi(o)-1).
///
/// Values of different orders combine by lifting both to the lcm order.
class CycloElement {
 public:
  CycloElement() : CycloElement(1) {}
  explicit CycloElement(long order);
  CycloElement(long order, std::vector<Rational> coeffs);

  static CycloElement constant(long order, const Rational& value);
  /// zeta_o^e for any integer e.
  static CycloElement zeta_power(long order, long exponent);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coordinate; meaningful when is_rational().
  const Rational& constant_term() const { return coeffs_[0]; }
  /// True when every coordinate is an integer.
  bool is_integral() const;

  /// Same value expressed in Q(zeta_target); order() must divide target.
  CycloElement lift(long target) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  CycloElement operator-() const;
  CycloElement& operator+=(const CycloElement& y);
  CycloElement& operator-=(const CycloElement& y);
  CycloElement& operator*=(const Rational& r);

  friend CycloElement operator+(CycloElement x, const CycloElement& y) { return x += y; }
  friend CycloElement operator-(CycloElement x, const CycloElement& y) { return x -= y; }
  friend CycloElement operator*(const CycloElement& x, const CycloElement& y);
  friend CycloElement operator*(CycloElement x, const Rational& r) { return x *= r; }
  friend CycloElement operator*(const Rational& r, CycloElement x) { return x *= r; }

  friend bool operator==(const CycloElement& x, const CycloElement& y);
  friend bool operator!=(const CycloElement& x, const CycloElement& y) { return !(x == y); }

 private:
  /// Reduces a polynomial of arbitrary degree modulo Phi_order.
  static std::vector<Rational> reduce(long order, std::vector<Rational> poly);

  long order_;
  std::vector<Rational> coeffs_;
};

}  // namespace hecke
