#include "hecke/quadfield.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "hecke/error.hpp"

namespace hecke {

namespace {

bool d_is_1_mod_4(const Integer& d) { return Integer(d % 4) == 1; }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Extended gcd: returns g and sets u, v with u*a + v*b = g >= 0.
Integer xgcd(const Integer& a, const Integer& b, Integer& u, Integer& v) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

FieldData make_field(const Integer& d) {
  if (d <= 1) throw Error(ErrorKind::InvalidArgument, "field radicand must exceed 1, got " + d.get_str());
  Integer p = square_factor(d);
  if (p != 0) {
    throw Error(ErrorKind::NotSquarefree, d.get_str() + " is divisible by " + p.get_str() + "^2",
                p.get_str());
  }
  FieldData F;
  F.d = d;
  if (d_is_1_mod_4(d)) {
    F.discriminant = d;
    F.omega = QuadSurd(1, 1, 2, d);
  } else {
    F.discriminant = 4 * d;
    F.omega = QuadSurd(0, 1, 1, d);
  }

  // x = omega + floor(-omega') is reduced, so its expansion is purely periodic and
  // the product of the complete quotients over one period is the fundamental unit.
  QuadSurd x0 = F.omega + Rational((-F.omega.conj()).floor());
  QuadSurd x = x0;
  QuadSurd unit = QuadSurd::rational(1, d);
  std::size_t steps = 0;
  do {
    unit = unit * x;
    Integer a = x.floor();
    x = QuadSurd::rational(1, d) / (x - Rational(a));
    ++steps;
  } while (x != x0);
  HECKE_ASSERT(unit.norm() == 1 || unit.norm() == -1, "period product is not a unit");
  F.fund_unit = unit;
  F.fund_unit_norm = unit.norm() == 1 ? 1 : -1;
  HECKE_ASSERT(F.fund_unit_norm == ((steps % 2 == 0) ? 1 : -1), "unit norm disagrees with period parity");
  F.tp_fund_unit = F.fund_unit_norm == 1 ? unit : unit * unit;
  HECKE_ASSERT(F.tp_fund_unit.sign() > 0 && F.tp_fund_unit.conj().sign() > 0,
               "unit is not totally positive");
  HECKE_ASSERT(F.tp_fund_unit.norm() == 1, "totally positive unit must have norm 1");
  return F;
}

std::pair<Rational, Rational> to_coords(const FieldData& F, const QuadSurd& v) {
  Rational p = v.rational_part();
  Rational r = v.surd_coeff();
  if (!v.is_rational() && v.d() != F.d) {
    throw Error(ErrorKind::InvalidArgument, "element of Q(sqrt " + v.d().get_str() +
                                                ") used in Q(sqrt " + F.d.get_str() + ")");
  }
  if (d_is_1_mod_4(F.d)) return {p - r, 2 * r};
  return {p, r};
}

QuadSurd from_coords(const FieldData& F, const Rational& x, const Rational& y) {
  return QuadSurd::rational(x, F.d) + F.omega * y;
}

IdealLattice IdealLattice::from_generators(const FieldData& F, const std::vector<QuadSurd>& gens) {
  std::vector<std::pair<Rational, Rational>> vs;
  Integer den = 1;
  for (const auto& g : gens) {
    auto c = to_coords(F, g);
    den = lcm(den, lcm(c.first.get_den(), c.second.get_den()));
    vs.push_back(c);
  }
  std::vector<std::pair<Integer, Integer>> iv;
  for (const auto& [x, y] : vs) {
    Rational sx = x * den;
    Rational sy = y * den;
    iv.emplace_back(sx.get_num(), sy.get_num());
  }
  // Second coordinate: gcd of all y with a combining vector w.
  Integer C = 0;
  Integer wx = 0;
  for (const auto& [x, y] : iv) {
    Integer u, v;
    Integer g = xgcd(C, y, u, v);
    wx = u * wx + v * x;
    C = g;
  }
  if (C == 0) throw Error(ErrorKind::InvalidArgument, "generators do not span a rank-2 lattice");
  Integer A = 0;
  for (const auto& [x, y] : iv) A = gcd(A, Integer(x - (y / C) * wx));
  if (A == 0) throw Error(ErrorKind::InvalidArgument, "generators do not span a rank-2 lattice");
  Integer B;
  mpz_fdiv_r(B.get_mpz_t(), wx.get_mpz_t(), A.get_mpz_t());

  IdealLattice L;
  L.d_ = F.d;
  L.A_ = make_rational(A, den);
  L.B_ = make_rational(B, den);
  L.C_ = make_rational(C, den);
  return L;
}

IdealLattice IdealLattice::from_basis(const FieldData& F, const QuadSurd& alpha, const QuadSurd& beta) {
  auto a = to_coords(F, alpha);
  auto b = to_coords(F, beta);
  if (a.first * b.second - a.second * b.first == 0) {
    throw Error(ErrorKind::InvalidArgument, "lattice basis is linearly dependent over Q");
  }
  return from_generators(F, {alpha, beta});
}

IdealLattice IdealLattice::unit(const FieldData& F) {
  return from_basis(F, QuadSurd::rational(1, F.d), F.omega);
}

std::pair<QuadSurd, QuadSurd> IdealLattice::basis(const FieldData& F) const {
  return {QuadSurd::rational(A_, F.d), from_coords(F, B_, C_)};
}

bool IdealLattice::contains(const FieldData& F, const QuadSurd& v) const {
  auto [x, y] = to_coords(F, v);
  Rational t = y / C_;
  if (!is_integer(t)) return false;
  return is_integer((x - t * B_) / A_);
}

bool IdealLattice::is_integral() const {
  return is_integer(A_) && is_integer(B_) && is_integer(C_);
}

bool is_fractional_ideal(const FieldData& F, const IdealLattice& L) {
  auto [alpha, beta] = L.basis(F);
  return L.contains(F, F.omega * alpha) && L.contains(F, F.omega * beta);
}

Rational ideal_norm(const FieldData& F, const IdealLattice& L) {
  if (!is_fractional_ideal(F, L)) throw Error(ErrorKind::NotAnIdeal, "lattice is not an O-module");
  return L.A() * L.C();
}

IdealLattice ideal_product(const FieldData& F, const IdealLattice& L, const IdealLattice& M) {
  auto [a1, b1] = L.basis(F);
  auto [a2, b2] = M.basis(F);
  return IdealLattice::from_generators(F, {a1 * a2, a1 * b2, b1 * a2, b1 * b2});
}

IdealLattice ideal_inverse(const FieldData& F, const IdealLattice& L) {
  Rational n = ideal_norm(F, L);
  auto [alpha, beta] = L.basis(F);
  Rational inv = 1 / n;
  IdealLattice R = IdealLattice::from_basis(F, alpha.conj() * inv, beta.conj() * inv);
  HECKE_ASSERT(ideal_product(F, L, R) == IdealLattice::unit(F), "ideal inverse product check failed");
  return R;
}

std::int64_t unit_order_mod_q(const FieldData& F, std::int64_t q) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1");
  if (q == 1) return 1;
  auto [ex, ey] = to_coords(F, F.tp_fund_unit);
  HECKE_ASSERT(is_integer(ex) && is_integer(ey), "unit is not integral");
  const Integer Q = q;
  // omega^2 = t*omega + n in O.
  Integer t = d_is_1_mod_4(F.d) ? 1 : 0;
  Integer n = d_is_1_mod_4(F.d) ? Integer((F.d - 1) / 4) : F.d;
  auto mod = [&](const Integer& v) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), Q.get_mpz_t());
    return r;
  };
  Integer ux = mod(ex.get_num());
  Integer uy = mod(ey.get_num());
  Integer x = ux;
  Integer y = uy;
  const std::int64_t limit = q * q;
  for (std::int64_t k = 1; k <= limit; ++k) {
    if (x == mod(1) && y == 0) return k;
    // (x + y w)(ux + uy w) = x ux + n y uy + (x uy + y ux + t y uy) w
    Integer nx = mod(x * ux + n * y * uy);
    Integer ny = mod(x * uy + y * ux + t * y * uy);
    x = nx;
    y = ny;
  }
  HECKE_ASSERT(false, "unit order mod q not found within |O/qO|");
  return 0;
}

void check_compatible_pair(const FieldData& F, const IdealLattice& b, const QuadSurd& delta) {
  IdealLattice L = IdealLattice::from_basis(F, QuadSurd::rational(1, F.d), delta);
  if (!is_fractional_ideal(F, L) || !is_fractional_ideal(F, b) ||
      ideal_product(F, b, L) != IdealLattice::unit(F)) {
    throw Error(ErrorKind::IncompatiblePair, "b * [1, delta] is not the maximal order");
  }
}

std::int64_t norm_residue(const FieldData& F, const IdealLattice& b, const QuadSurd& delta,
                          const Integer& C, const Integer& D, std::int64_t q) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1");
  check_compatible_pair(F, b, delta);
  Rational tr = delta.trace();
  Rational nm = delta.norm();
  Rational value = (Rational(C * C) + tr * C * D + nm * D * D) * ideal_norm(F, b);
  HECKE_ASSERT(is_integer(value), "norm of an integral ideal must be an integer");
  Integer r;
  Integer Q = q;
  mpz_fdiv_r(r.get_mpz_t(), value.get_num_mpz_t(), Q.get_mpz_t());
  return r.get_si();
}

ClassNumbers class_numbers(const Integer& d, std::int64_t bound) {
  if (d > bound) {
    throw Error(ErrorKind::BoundExceeded,
                "d = " + d.get_str() + " exceeds class-number bound " + std::to_string(bound));
  }
  FieldData F = make_field(d);
  const std::int64_t D = to_int64(F.discriminant);
  const std::int64_t s = to_int64(isqrt(F.discriminant));
  using Form = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

  std::set<Form> reduced;
  for (std::int64_t b = (D % 2 == 0 ? 2 : 1); b <= s; b += 2) {
    std::int64_t ac = (b * b - D) / 4;  // negative
    std::int64_t m = -ac;
    for (std::int64_t a = 1; a * a <= m; ++a) {
      if (m % a != 0) continue;
      for (std::int64_t aa : {a, m / a}) {
        for (std::int64_t sign : {1, -1}) {
          std::int64_t fa = sign * aa;
          std::int64_t fc = ac / fa;
          if (2 * aa + b >= s + 1 && 2 * aa - b <= s) reduced.emplace(fa, b, fc);
        }
      }
    }
  }

  auto rho = [&](const Form& f) {
    auto [a, b, c] = f;
    std::int64_t twoc = 2 * (c < 0 ? -c : c);
    std::int64_t nb = s - (((s + b) % twoc) + twoc) % twoc;
    return Form{c, nb, (nb * nb - D) / (4 * c)};
  };

  std::map<Form, int> cycle_of;
  int cycles = 0;
  for (const auto& f : reduced) {
    if (cycle_of.count(f)) continue;
    Form g = f;
    do {
      HECKE_ASSERT(reduced.count(g), "reduction operator left the reduced set");
      cycle_of[g] = cycles;
      g = rho(g);
    } while (g != f);
    ++cycles;
  }

  // Wide classes: cycles identified under (a, b, c) -> (-a, b, -c).
  std::set<std::pair<int, int>> merged;
  for (int c = 0; c < cycles; ++c) {
    for (const auto& [f, id] : cycle_of) {
      if (id != c) continue;
      auto [a, b, cc] = f;
      int other = cycle_of.at(Form{-a, b, -cc});
      merged.emplace(std::min(c, other), std::max(c, other));
      break;
    }
  }
  std::set<int> reps;
  for (const auto& [lo, hi] : merged) reps.insert(lo);

  ClassNumbers out;
  out.h_plus = cycles;
  out.h = static_cast<std::int64_t>(reps.size());
  std::int64_t expected_plus = F.fund_unit_norm == -1 ? out.h : 2 * out.h;
  HECKE_ASSERT(expected_plus == out.h_plus, "narrow class number disagrees with the unit-norm rule");
  return out;
}

QuadSurd principal_delta(const FieldData& F) {
  return F.omega + Rational((-F.omega.conj()).floor() + 1);
}

}  // namespace hecke
