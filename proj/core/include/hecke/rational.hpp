#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hecke {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduces `q` to canonical form (coprime parts, positive denominator).
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// The map R -> (0,1] that agrees with x mod 1 and sends integers to 1.
Rational frac_pos(const Rational& x);

/// x - frac_pos(x): floor(x) for non-integers, x - 1 for integers.
Integer floor_strict(const Rational& x);

/// Residue of m in [1, q].
Integer residue_1q(const Integer& m, const Integer& q);
std::int64_t residue_1q(std::int64_t m, std::int64_t q);

/// Bernoulli polynomial B_k(x) for k in {1, 2}.
Rational bernoulli_poly(int k, const Rational& x);

inline Rational bernoulli1(const Rational& x) { return x - Rational(1, 2); }
inline Rational bernoulli2(const Rational& x) { return x * x - x + Rational(1, 6); }

/// "num/den" with den >= 1 always printed.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Accepts "num/den" or a bare integer.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Narrowing conversion that throws InvalidArgument when the value does not fit.
std::int64_t to_int64(const Integer& x);

Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// Smallest prime p with p^2 | n, or 0 when n is squarefree. Requires n != 0.
Integer square_factor(const Integer& n);

/// Writes n = k^2 * core with core squarefree (sign carried by core).
void square_decompose(const Integer& n, Integer& k, Integer& core);

}  // namespace hecke
