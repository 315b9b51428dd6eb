#include <gtest/gtest.h>

#include <set>

#include "expect_error.hpp"
#include "generators.hpp"
#include "hecke/quadfield.hpp"
#include "oracles.hpp"

using namespace hecke;
using hecke::testing::Gen;

TEST(QuadField, SmallFields) {
  FieldData F2 = make_field(2);
  EXPECT_EQ(F2.discriminant, 8);
  EXPECT_EQ(F2.fund_unit, QuadSurd(1, 1, 1, 2));
  EXPECT_EQ(F2.fund_unit_norm, -1);
  EXPECT_EQ(F2.tp_fund_unit, QuadSurd(3, 2, 1, 2));

  FieldData F5 = make_field(5);
  EXPECT_EQ(F5.discriminant, 5);
  EXPECT_EQ(F5.omega, QuadSurd(1, 1, 2, 5));
  EXPECT_EQ(F5.fund_unit, QuadSurd(1, 1, 2, 5));
  EXPECT_EQ(F5.tp_fund_unit, QuadSurd(3, 1, 2, 5));

  FieldData F3 = make_field(3);
  EXPECT_EQ(F3.fund_unit, QuadSurd(2, 1, 1, 3));
  EXPECT_EQ(F3.fund_unit_norm, 1);
  EXPECT_EQ(F3.tp_fund_unit, F3.fund_unit);
}

TEST(QuadField, RejectsBadRadicands) {
  EXPECT_HECKE_ERROR(make_field(12), NotSquarefree);
  EXPECT_HECKE_ERROR(make_field(1), InvalidArgument);
  EXPECT_HECKE_ERROR(make_field(-5), InvalidArgument);
  try {
    make_field(50);
  } catch (const Error& e) {
    EXPECT_EQ(e.witness(), "5");
  }
}

// Oracle: smallest solution of the Pell-type equation by direct search.
TEST(QuadFieldProperty, FundamentalUnitMatchesPellSearch) {
  for (std::int64_t d = 2; d <= 60; ++d) {
    if (square_factor(Integer(d)) != 0) continue;
    FieldData F = make_field(d);
    bool one_mod_four = d % 4 == 1;
    auto [x, y] = hecke::testing::pell_search(d, one_mod_four ? 4 : 1, 100000);
    ASSERT_NE(y, 0) << d;
    QuadSurd expected(x, y, one_mod_four ? 2 : 1, d);
    EXPECT_EQ(F.fund_unit, expected) << d;
    EXPECT_EQ(F.fund_unit.norm(), F.fund_unit_norm) << d;
    EXPECT_EQ(F.tp_fund_unit, F.fund_unit_norm == 1 ? F.fund_unit : F.fund_unit * F.fund_unit) << d;
  }
}

TEST(QuadField, ClassNumberTable) {
  struct Row {
    int d, h, h_plus;
  };
  for (auto [d, h, hp] : {Row{2, 1, 1}, Row{3, 1, 2}, Row{5, 1, 1}, Row{6, 1, 2}, Row{10, 2, 2}, Row{15, 2, 4},
                          Row{13, 1, 1}, Row{79, 3, 6}, Row{82, 4, 4}}) {
    ClassNumbers cn = class_numbers(d);
    EXPECT_EQ(cn.h, h) << d;
    EXPECT_EQ(cn.h_plus, hp) << d;
  }
}

// Class number one for n^2 + 4 exactly at n = 1, 3, 5, 7, 13, 17.
TEST(QuadFieldProperty, YokoiClassNumberOneList) {
  const std::set<std::int64_t> one{1, 3, 5, 7, 13, 17};
  for (std::int64_t n = 1; n <= 61; n += 2) {
    Integer d = n * n + 4;
    if (square_factor(d) != 0) continue;
    EXPECT_EQ(class_numbers(d).h == 1, one.count(n) == 1) << n;
  }
}

// Class number one for n^2 + 1 exactly at n = 1, 2, 4, 6, 10, 14, 26.
TEST(QuadFieldProperty, ChowlaClassNumberOneList) {
  const std::set<std::int64_t> one{1, 2, 4, 6, 10, 14, 26};
  for (std::int64_t n = 1; n <= 60; ++n) {
    Integer d = n * n + 1;
    if (square_factor(d) != 0) continue;
    EXPECT_EQ(class_numbers(d).h == 1, one.count(n) == 1) << n;
  }
}

// Genus theory: 2^(t-1) divides the narrow class number, t = number of primes dividing the discriminant.
TEST(QuadFieldProperty, GenusDivisibility) {
  Gen g(41);
  for (int t = 0; t < 60; ++t) {
    std::int64_t d = g.squarefree(2, 3000);
    FieldData F = make_field(d);
    std::int64_t disc = to_int64(F.discriminant), primes = 0;
    for (std::int64_t p = 2; p <= disc; ++p) {
      if (disc % p == 0 && hecke::testing::prime_by_trial(p)) ++primes;
    }
    ClassNumbers cn = class_numbers(d);
    EXPECT_EQ(cn.h_plus % (std::int64_t{1} << (primes - 1)), 0) << d;
    EXPECT_EQ(cn.h_plus, F.fund_unit_norm == -1 ? cn.h : 2 * cn.h) << d;
  }
}

TEST(QuadField, IdealBasics) {
  FieldData F = make_field(15);
  QuadSurd delta(6, 1, 3, 15);
  IdealLattice L = IdealLattice::from_basis(F, QuadSurd::rational(1, 15), delta);
  EXPECT_TRUE(is_fractional_ideal(F, L));
  EXPECT_EQ(ideal_norm(F, L), Rational(1, 3));
  IdealLattice inv = ideal_inverse(F, L);
  EXPECT_EQ(inv.A(), 3);
  EXPECT_EQ(inv.B(), 0);
  EXPECT_EQ(inv.C(), 1);
  EXPECT_EQ(ideal_product(F, L, inv), IdealLattice::unit(F));

  IdealLattice not_ideal = IdealLattice::from_basis(F, QuadSurd::rational(1, 15), QuadSurd(0, 2, 1, 15));
  EXPECT_FALSE(is_fractional_ideal(F, not_ideal));
}

TEST(QuadFieldProperty, IdealTimesInverseIsUnit) {
  Gen g(42);
  for (int t = 0; t < 50; ++t) {
    std::int64_t d = g.squarefree(2, 200);
    FieldData F = make_field(d);
    // n O + alpha O for a random integer n and algebraic integer alpha.
    Integer n = g.range(1, 30);
    QuadSurd alpha = from_coords(F, g.range(-30, 30), g.range(-30, 30));
    if (alpha.sign() == 0) alpha = QuadSurd::rational(1, d);
    QuadSurd nn = QuadSurd::rational(Rational(n), d);
    IdealLattice I = IdealLattice::from_generators(F, {nn, nn * F.omega, alpha, alpha * F.omega});
    ASSERT_TRUE(is_fractional_ideal(F, I));
    EXPECT_TRUE(I.is_integral());
    IdealLattice inv = ideal_inverse(F, I);
    EXPECT_EQ(ideal_product(F, I, inv), IdealLattice::unit(F));
    EXPECT_EQ(ideal_norm(F, I) * ideal_norm(F, inv), 1);
    // Principal ideal: norm is |N(alpha)|.
    IdealLattice P = IdealLattice::from_generators(F, {alpha, alpha * F.omega});
    EXPECT_EQ(ideal_norm(F, P), abs(alpha.norm()));
    EXPECT_TRUE(P.contains(F, alpha));
  }
}

TEST(QuadField, UnitOrderModQ) {
  FieldData F2 = make_field(2);
  EXPECT_EQ(unit_order_mod_q(F2, 1), 1);
  EXPECT_EQ(unit_order_mod_q(F2, 3), 4);
  FieldData F5 = make_field(5);
  EXPECT_EQ(unit_order_mod_q(F5, 3), 4);
  for (std::int64_t q : {2, 3, 4, 5, 7, 9}) {
    std::int64_t lambda = unit_order_mod_q(F2, q);
    QuadSurd p = QuadSurd::rational(1, 2);
    for (std::int64_t k = 0; k < lambda; ++k) p = p * F2.tp_fund_unit;
    auto [x, y] = to_coords(F2, p - QuadSurd::rational(1, 2));
    EXPECT_TRUE(is_integer(x / q) && is_integer(y / q)) << q;
  }
}

TEST(QuadField, CompatiblePairAndNormResidue) {
  FieldData F = make_field(5);
  QuadSurd delta = principal_delta(F);
  EXPECT_EQ(delta, QuadSurd(3, 1, 2, 5));
  IdealLattice O = IdealLattice::unit(F);
  EXPECT_NO_THROW(check_compatible_pair(F, O, delta));
  // N(C + D delta) = C^2 + 3CD + D^2.
  for (std::int64_t C = 1; C <= 3; ++C) {
    for (std::int64_t D = 1; D <= 3; ++D) {
      EXPECT_EQ(norm_residue(F, O, delta, C, D, 3), hecke::testing::pos_mod(C * C + 3 * C * D + D * D, 3));
    }
  }
  IdealLattice twice = IdealLattice::from_generators(F, {QuadSurd::rational(2, 5), F.omega * QuadSurd::rational(2, 5)});
  EXPECT_HECKE_ERROR(check_compatible_pair(F, twice, delta), IncompatiblePair);
}
