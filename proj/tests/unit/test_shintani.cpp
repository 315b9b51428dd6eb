#include <gtest/gtest.h>

#include <numeric>

#include "expect_error.hpp"
#include "generators.hpp"
#include "hecke/parallel.hpp"
#include "hecke/shintani.hpp"
#include "oracles.hpp"

using namespace hecke;
using hecke::testing::Gen;

namespace {

MinusCF principal_word(const FieldData& F) { return minus_expand(principal_delta(F)); }

// B1(psi) = (1/f) sum a psi(a), evaluated with a locally computed Kronecker symbol.
CycloElement b1_twisted_oracle(const DirichletCharacter& chi, std::int64_t D) {
  const std::int64_t f = chi.modulus() * D;
  CycloElement s(1);
  for (std::int64_t a = 1; a <= f; ++a) {
    s += chi.value(a) * Rational(a * hecke::testing::kronecker_small(D, a));
  }
  return s * Rational(1, f);
}

CycloElement b1_oracle(const DirichletCharacter& chi) {
  CycloElement s(1);
  for (std::int64_t a = 1; a <= chi.modulus(); ++a) s += chi.value(a) * Rational(a);
  return s * Rational(1, chi.modulus());
}

}  // namespace

TEST(Shintani, SeedsAndRange) {
  MinusCF mcf = principal_word(make_field(2));
  YamamotoSeq seq = yamamoto_sequence(3, 1, 1, mcf);
  EXPECT_EQ(seq.x_at(-1), Rational(2, 3));
  EXPECT_EQ(seq.x_at(0), Rational(1, 3));
  EXPECT_EQ(seq.y_at(0), Rational(1, 3));
  YamamotoSeq corner = yamamoto_sequence(3, 3, 3, mcf);
  EXPECT_EQ(corner.x_at(-1), 1);
  EXPECT_EQ(corner.x_at(0), 1);
}

TEST(Shintani, SingleCellValues) {
  EXPECT_EQ(partial_zeta_zero(3, 1, 1, principal_word(make_field(2))), Rational(2, 9));
  EXPECT_EQ(partial_zeta_zero(3, 1, 1, principal_word(make_field(5))), Rational(-1, 9));
}

TEST(Shintani, KnownLValues) {
  DirichletCharacter chi(3, {1});
  for (int d : {2, 5}) {
    FieldData F = make_field(d);
    EXPECT_EQ(partial_hecke_L_zero(F, principal_delta(F), IdealLattice::unit(F), chi),
              CycloElement::constant(1, Rational(2, 3)))
        << d;
  }
}

// Holds when the fundamental unit has norm -1.
TEST(Shintani, TrivialModulusVanishes) {
  for (int d : {2, 5, 10, 13, 29}) {
    FieldData F = make_field(d);
    ASSERT_EQ(F.fund_unit_norm, -1);
    EXPECT_TRUE(partial_hecke_L_zero(F, principal_delta(F), IdealLattice::unit(F), DirichletCharacter(1, {})).is_zero());
  }
}

TEST(Shintani, Errors) {
  FieldData F = make_field(5);
  EXPECT_HECKE_ERROR(check_delta_range(QuadSurd(1, 1, 2, 5)), DeltaOutOfRange);
  EXPECT_HECKE_ERROR(check_delta_range(QuadSurd(5, 1, 2, 5) + QuadSurd::rational(1, 5)), DeltaOutOfRange);
  EXPECT_NO_THROW(check_delta_range(QuadSurd(3, 1, 2, 5)));
  // Wrong lattice for delta.
  IdealLattice twice = IdealLattice::from_generators(F, {QuadSurd::rational(2, 5), F.omega * QuadSurd::rational(2, 5)});
  EXPECT_HECKE_ERROR(partial_hecke_L_zero(F, principal_delta(F), twice, DirichletCharacter(3, {1})), IncompatiblePair);
}

// Narrow class number one: the partial value is the full L(0, chi o N), which factors as B1(chi) B1(chi chi_D).
TEST(ShintaniProperty, BernoulliFactorizationWhenNarrowClassNumberIsOne) {
  for (int d : {2, 5, 13, 29, 53}) {
    FieldData F = make_field(d);
    ASSERT_EQ(class_numbers(d).h_plus, 1);
    const std::int64_t D = to_int64(F.discriminant);
    for (std::int64_t q : {3, 4, 5, 7}) {
      if (std::gcd(q, D) != 1) continue;
      for (const auto& chi : enumerate_characters(q)) {
        CharInvariants inv = char_invariants(chi);
        if (inv.parity != Parity::Odd || inv.conductor != q) continue;
        CycloElement L = partial_hecke_L_zero(F, principal_delta(F), IdealLattice::unit(F), chi);
        EXPECT_EQ(L, b1_oracle(chi) * b1_twisted_oracle(chi, D)) << "d=" << d << " " << chi.id();
      }
    }
  }
}

// Summing every cell mod q recovers the modulus-one value.
TEST(ShintaniProperty, CellsSumToModulusOne) {
  for (int d : {2, 3, 5, 6, 7, 13, 15, 29}) {
    MinusCF mcf = principal_word(make_field(d));
    Rational whole = partial_zeta_zero(1, 1, 1, mcf);
    for (std::int64_t q = 2; q <= 6; ++q) {
      Rational s = 0;
      for (std::int64_t C = 1; C <= q; ++C) {
        for (std::int64_t D = 1; D <= q; ++D) s += partial_zeta_zero(q, C, D, mcf);
      }
      EXPECT_EQ(s, whole) << "d=" << d << " q=" << q;
    }
  }
}

TEST(ShintaniProperty, RecursionStaysOnTheGrid) {
  Gen g(71);
  for (int t = 0; t < 60; ++t) {
    std::int64_t d = g.squarefree(2, 400);
    FieldData F = make_field(d);
    MinusCF mcf = principal_word(F);
    std::int64_t q = g.range(1, 9), C = g.range(1, q), D = g.range(1, q);
    YamamotoSeq seq = yamamoto_sequence(q, C, D, mcf, 3 * mcf.m());
    for (const auto& x : seq.x) {
      EXPECT_GT(x, 0);
      EXPECT_LE(x, 1);
      EXPECT_TRUE(is_integer(x * q));
    }
    EXPECT_TRUE(is_integer(partial_zeta_zero(q, C, D, mcf) * 12 * q * q));
  }
}

TEST(ShintaniProperty, IdentityResidualAndOrbitShift) {
  for (int d : {2, 3, 5, 6, 7, 10, 13, 15, 29}) {
    FieldData F = make_field(d);
    MinusCF mcf = principal_word(F);
    for (std::int64_t q : {2, 3, 4, 5}) {
      for (std::int64_t C = 1; C <= q; ++C) {
        for (std::int64_t D = 1; D <= q; ++D) {
          EXPECT_EQ(yamamoto_identity_residual(F, mcf, q, C, D), 0) << d << " " << q << " " << C << " " << D;
          EXPECT_TRUE(orbit_shift_check(F, mcf, q, C, D)) << d << " " << q << " " << C << " " << D;
        }
      }
    }
  }
}

TEST(Shintani, UnitActionMatrix) {
  FieldData F = make_field(2);
  QuadSurd delta = principal_delta(F);
  auto m = unit_action(F, delta);
  ASSERT_EQ(m.size(), 4u);
  QuadSurd one = QuadSurd::rational(1, 2);
  auto lift = [&](const Integer& a, const Integer& b) {
    return QuadSurd::rational(Rational(a), 2) + QuadSurd::rational(Rational(b), 2) * delta;
  };
  EXPECT_EQ(F.tp_fund_unit * one, lift(m[0], m[1]));
  EXPECT_EQ(F.tp_fund_unit * delta, lift(m[2], m[3]));
}

TEST(ShintaniProperty, DeterministicAcrossThreadCounts) {
  FieldData F = make_field(29);
  DirichletCharacter chi(7, {1});
  unsigned saved = thread_limit();
  set_thread_limit(1);
  CycloElement serial = partial_hecke_L_zero(F, principal_delta(F), IdealLattice::unit(F), chi);
  set_thread_limit(4);
  CycloElement threaded = partial_hecke_L_zero(F, principal_delta(F), IdealLattice::unit(F), chi);
  set_thread_limit(saved);
  EXPECT_EQ(serial, threaded);
}
