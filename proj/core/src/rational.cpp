#include "hecke/rational.hpp"

#include <limits>
#include <utility>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor(const Rational& x) { return floor_div(x.get_num(), x.get_den()); }
Integer ceil(const Rational& x) { return ceil_div(x.get_num(), x.get_den()); }

Rational frac_pos(const Rational& x) {
  Rational f = x - Rational(floor(x));
  if (f == 0) return Rational(1);
  return f;
}

Integer floor_strict(const Rational& x) {
  Rational v = x - frac_pos(x);
  return v.get_num();
}

Integer residue_1q(const Integer& m, const Integer& q) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "residue_1q: modulus must be >= 1");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
  return r == 0 ? q : r;
}

std::int64_t residue_1q(std::int64_t m, std::int64_t q) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "residue_1q: modulus must be >= 1");
  std::int64_t r = m % q;
  if (r <= 0) r += q;
  return r;
}

Rational bernoulli_poly(int k, const Rational& x) {
  switch (k) {
    case 1: return bernoulli1(x);
    case 2: return bernoulli2(x);
    default:
      throw Error(ErrorKind::InvalidArgument, "bernoulli_poly: only k = 1, 2 supported");
  }
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::ParseError, "bad integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(ErrorKind::ParseError, "bad integer literal '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<long>::max() || x < std::numeric_limits<long>::min()) {
    throw Error(ErrorKind::InvalidArgument, "integer out of 64-bit range: " + x.get_str());
  }
  return x.get_si();
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of negative value");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

namespace {

// Trial division budget; past it the cofactor is classified by primality and squareness.
constexpr unsigned long kTrialLimit = 2000000;

const std::vector<unsigned long>& trial_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

Integer cube_root_floor(const Integer& m) {
  Integer r;
  mpz_root(r.get_mpz_t(), m.get_mpz_t(), 3);
  return r;
}

// Splits |n| into prime powers found by trial division plus a cofactor with no
// prime factor below the last trial divisor.
void factor_small(const Integer& n, std::vector<std::pair<Integer, int>>& found, Integer& cofactor,
                  bool& resolved) {
  Integer m = abs(n);
  Integer root = cube_root_floor(m);
  resolved = false;
  for (unsigned long p : trial_primes()) {
    // p > floor(cbrt(m)) exactly when p^3 > m.
    if (root < p) {
      resolved = true;
      break;
    }
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    found.emplace_back(Integer(p), e);
    root = cube_root_floor(m);
  }
  if (!resolved && root <= kTrialLimit) resolved = true;
  cofactor = m;
}

}  // namespace

// With no prime factor below the cube root left, the cofactor is 1, a prime, a
// product of two distinct primes, or a prime square.
void square_decompose(const Integer& n, Integer& k, Integer& core) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "square_decompose of zero");
  std::vector<std::pair<Integer, int>> found;
  Integer m;
  bool resolved = false;
  factor_small(n, found, m, resolved);
  k = 1;
  core = n < 0 ? -1 : 1;
  for (const auto& [p, e] : found) {
    for (int i = 0; i + 1 < e; i += 2) k *= p;
    if (e % 2 == 1) core *= p;
  }
  if (m == 1) return;
  if (is_perfect_square(m)) {
    k *= isqrt(m);
    return;
  }
  if (!resolved && mpz_probab_prime_p(m.get_mpz_t(), 40) == 0) {
    throw Error(ErrorKind::BoundExceeded, "cannot certify squarefree part of " + n.get_str());
  }
  core *= m;
}

Integer square_factor(const Integer& n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "square_factor of zero");
  std::vector<std::pair<Integer, int>> found;
  Integer m;
  bool resolved = false;
  factor_small(n, found, m, resolved);
  for (const auto& [p, e] : found) {
    if (e >= 2) return p;
  }
  if (m != 1 && is_perfect_square(m)) return isqrt(m);
  if (m != 1 && !resolved && mpz_probab_prime_p(m.get_mpz_t(), 40) == 0) {
    throw Error(ErrorKind::BoundExceeded, "cannot certify squarefreeness of " + n.get_str());
  }
  return 0;
}

}  // namespace hecke
