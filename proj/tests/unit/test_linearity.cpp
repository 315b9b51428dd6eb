#include <gtest/gtest.h>

#include <algorithm>

#include "expect_error.hpp"
#include "generators.hpp"
#include "hecke/linearity.hpp"
#include "hecke/shintani.hpp"
#include "oracles.hpp"

using namespace hecke;
using hecke::testing::Gen;

namespace {

// Half squared gap plus the B2 increment, minus 1/12.
Rational block_summand(const Rational& x, const Rational& y) {
  return (x - y) * (x - y) / 2 - Rational(1, 12) + (bernoulli2(x) - bernoulli2(y)) / 2;
}

std::vector<std::int64_t> admissible_with_digits(const FamilySpec& spec, std::int64_t q, std::int64_t r,
                                                 std::size_t count) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = r; out.size() < count && n < r + 200 * q; n += q) {
    if (n < 1) continue;
    try {
      family_instance(spec, n);
    } catch (const Error&) {
      continue;
    }
    if (spec.min_digit(n) >= q) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST(Linearity, BuiltinFamilies) {
  FamilySpec y = yokoi_family();
  EXPECT_EQ(y.s(), 1);
  EXPECT_TRUE(y.is_linear());
  EXPECT_EQ(y.acf[0].alpha(), 1);
  EXPECT_EQ(y.acf[0].beta(), 0);
  FamilySpec rd = rd_n2p1_family();
  EXPECT_EQ(rd.acf[0].alpha(), 2);
  EXPECT_EQ(builtin_family("yokoi")->name, "yokoi");
  EXPECT_EQ(builtin_family("rd-n2p1")->name, "rd-n2p1");
  EXPECT_FALSE(builtin_family("nope").has_value());
  EXPECT_EQ(builtin_family_names().size(), 2u);
}

TEST(Linearity, FamilyInstances) {
  FamilySpec y = yokoi_family();
  FamilyInstance i3 = family_instance(y, 3);
  EXPECT_EQ(i3.field.d, 13);
  EXPECT_EQ(i3.delta, QuadSurd(5, 1, 2, 13));
  EXPECT_EQ(i3.b, IdealLattice::unit(i3.field));
  FamilyInstance i1 = family_instance(y, 1);
  EXPECT_EQ(i1.field.d, 5);
  EXPECT_EQ(i1.delta, QuadSurd(3, 1, 2, 5));
  EXPECT_HECKE_ERROR(family_instance(y, 2), NotAdmissible);
  EXPECT_HECKE_ERROR(family_instance(y, 11), NotSquarefree);

  FamilySpec unconstrained = y;
  unconstrained.n_constraints.parity.reset();
  try {
    family_instance(unconstrained, 2);
    ADD_FAILURE() << "n=2 should not be squarefree";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSquarefree);
    EXPECT_EQ(e.witness(), "8");
  }

  FamilySpec wrong = y;
  wrong.acf = {DigitPoly::linear(2, 0)};
  EXPECT_HECKE_ERROR(family_instance(wrong, 3), CFMismatch);
}

TEST(Linearity, GammaTau) {
  FamilySpec y = yokoi_family();
  auto a = gamma_tau(y, 0, 1, 3);
  EXPECT_EQ(a.gamma, 1);
  EXPECT_EQ(a.tau, 0);
  auto b = gamma_tau(y, 0, 0, 5);
  EXPECT_EQ(b.gamma, 5);
  EXPECT_EQ(b.tau, -1);
  auto c = gamma_tau(y, 0, 2, 3);
  EXPECT_EQ(c.gamma, 2);
  EXPECT_EQ(c.tau, 0);
}

TEST(Linearity, NuSequenceExamples) {
  FamilySpec y = yokoi_family();
  NuSequence s = nu_sequence(y, 3, 1, 1, 1);
  ASSERT_GE(s.nu.size(), 3u);
  EXPECT_EQ(s.nu_at(-1), Rational(2, 3));
  EXPECT_EQ(s.nu_at(0), Rational(1, 3));
  EXPECT_EQ(s.nu_at(1), Rational(1, 3));
  EXPECT_EQ(s.Gamma, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(s.d.at(0), 1);

  NuSequence corner = nu_sequence(y, 4, 2, 4, 4);
  EXPECT_EQ(corner.nu_at(-1), 0);
  EXPECT_EQ(corner.nu_at(0), 1);

  NuSequence t = nu_sequence(y, 3, 1, 2, 1);
  EXPECT_EQ(t.nu_at(-1), Rational(1, 3));
  EXPECT_EQ(t.nu_at(0), Rational(1, 3));
  EXPECT_EQ(t.nu_at(1), Rational(2, 3));
}

TEST(Linearity, ClosedFormCell) {
  CellAB ab = closed_form_cd(yokoi_family(), 3, 1, 1, 1);
  EXPECT_EQ(ab.A, Rational(-4, 3));
  EXPECT_EQ(ab.B, -4);
  for (std::int64_t n : {1, 7, 13}) {
    Rational direct = partial_zeta_zero(3, 1, 1, minus_expand(family_instance(yokoi_family(), n).delta));
    EXPECT_EQ(direct * 12, ab.A + ab.B * ((n - 1) / 3)) << n;
  }
}

// Finite-difference oracle: consecutive direct values differ by B/12 per step in k.
TEST(LinearityProperty, ClosedFormMatchesDirectDifferences) {
  for (const FamilySpec& spec : {yokoi_family(), rd_n2p1_family()}) {
    for (std::int64_t q : {3, 4, 5}) {
      for (std::int64_t r = 0; r < q; ++r) {
        auto ns = admissible_with_digits(spec, q, r, 3);
        if (ns.size() < 2) continue;
        for (std::int64_t C = 1; C <= q; ++C) {
          for (std::int64_t D = 1; D <= q; ++D) {
            CellAB ab = closed_form_cd(spec, q, r, C, D);
            for (auto n : ns) {
              Rational direct = partial_zeta_zero(q, C, D, family_instance(spec, n).minus);
              EXPECT_EQ(direct * 12, ab.A + ab.B * ((n - r) / q))
                  << spec.name << " q=" << q << " n=" << n << " C=" << C << " D=" << D;
            }
          }
        }
      }
    }
  }
}

TEST(LinearityProperty, ClosedFormIntegrality) {
  int cases = 0;
  for (const FamilySpec& spec : {yokoi_family(), rd_n2p1_family()}) {
    for (std::int64_t q = 1; q <= 7; ++q) {
      for (std::int64_t r = 0; r < q; ++r) {
        for (std::int64_t C = 1; C <= q; ++C) {
          for (std::int64_t D = 1; D <= q; ++D) {
            CellAB ab = closed_form_cd(spec, q, r, C, D);
            EXPECT_TRUE(is_integer(ab.A * q * q));
            EXPECT_TRUE(is_integer(ab.B * q * q));
            ++cases;
          }
        }
      }
    }
  }
  EXPECT_GE(cases, 200);
}

// Block bridge, squared-gap aggregate and block sums over the first block.
TEST(LinearityProperty, BlockIdentities) {
  FamilySpec y = yokoi_family();
  for (std::int64_t q : {3, 4, 5}) {
    for (std::int64_t r = 0; r < q; ++r) {
      for (std::int64_t n : admissible_with_digits(y, q, r, 2)) {
        FamilyInstance inst = family_instance(y, n);
        for (std::int64_t C = 1; C <= q; ++C) {
          for (std::int64_t D = 1; D <= q; ++D) {
            YamamotoSeq xs = yamamoto_sequence(q, C, D, inst.minus);
            NuSequence nu = nu_sequence(y, q, r, C, D);
            const Rational& d = nu.d.at(0);
            const Rational& start = nu.nu_at(nu.Gamma.at(0));
            const std::int64_t S = inst.minus.special_positions.at(0);
            for (std::int64_t i = 0; i <= nu.gamma.at(0); ++i) EXPECT_EQ(xs.x_at(S + i), nu.nu_at(nu.Gamma.at(0) + i));
            for (std::int64_t g = 1; g <= q; ++g) {
              Rational squares = 0, block = 0;
              for (std::int64_t i = S + 1; i <= S + g; ++i) {
                squares += (xs.x_at(i) - xs.x_at(i - 1)) * (xs.x_at(i) - xs.x_at(i - 1));
                block += block_summand(xs.x_at(i), xs.x_at(i - 1));
              }
              Rational tail = g * d * d + (1 - 2 * d) * Rational(floor_strict(start + d * g));
              EXPECT_EQ(squares, tail) << "q=" << q << " n=" << n << " g=" << g;
              Rational boundary = g < q ? bernoulli2(xs.x_at(S + g)) - bernoulli2(xs.x_at(S)) : Rational(0);
              EXPECT_EQ(block * 12, 6 * (tail + boundary) - g) << "q=" << q << " n=" << n << " g=" << g;
            }
          }
        }
      }
    }
  }
}

TEST(Linearity, HypothesisCheck) {
  FamilySpec y = yokoi_family();
  EXPECT_TRUE(hypothesis_check_norm(y, 3, 1, {0, 2, 4}));
  EXPECT_TRUE(hypothesis_check_norm(y, 5, 3, {0, 2}));
  EXPECT_HECKE_ERROR(hypothesis_check_norm(y, 3, 1, {0}), InsufficientSamples);
}

// Oracle: N(C + D delta) = C^2 + (n+2) CD + n D^2 for the Yokoi family.
TEST(LinearityProperty, YokoiNormResidueFormula) {
  FamilySpec y = yokoi_family();
  for (std::int64_t q : {3, 5, 7}) {
    for (std::int64_t n : {1, 3, 5, 7, 13, 17, 21}) {
      auto table = norm_residue_table(family_instance(y, n), q);
      for (std::int64_t C = 1; C <= q; ++C) {
        for (std::int64_t D = 1; D <= q; ++D) {
          std::int64_t expected = hecke::testing::pos_mod(C * C + (n + 2) * C * D + n * D * D, q);
          EXPECT_EQ(table.at(static_cast<std::size_t>((C - 1) * q + (D - 1))), expected);
        }
      }
    }
  }
}

TEST(Linearity, VerifyExamples) {
  FamilySpec y = yokoi_family();
  LinearityReport a = verify_linearity(y, 3, DirichletCharacter(3, {1}), 1, {2, 4, 6});
  EXPECT_TRUE(a.affine_exact);
  EXPECT_TRUE(a.closed_form_match);
  EXPECT_TRUE(a.hypothesis_holds);

  LinearityReport b = verify_linearity(y, 5, DirichletCharacter(5, {1}), 0, {1, 3, 5, 7, 9});
  EXPECT_TRUE(b.affine_exact);
  ASSERT_TRUE(b.B_chi.has_value());
  EXPECT_EQ(b.slope, *b.B_chi);
  for (const auto& p : b.points) EXPECT_TRUE(p.scaled_value.is_integral());

  EXPECT_HECKE_ERROR(verify_linearity(y, 5, DirichletCharacter(5, {1}), 0, {1, 3}), InsufficientSamples);
}

TEST(LinearityProperty, VerdictsIndependentOfKOrder) {
  FamilySpec y = yokoi_family();
  DirichletCharacter chi(5, {1});
  std::vector<std::int64_t> ks{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  LinearityReport base = verify_linearity(y, 5, chi, 2, ks);
  Gen g(81);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(ks.begin(), ks.end(), g.engine());
    LinearityReport other = verify_linearity(y, 5, chi, 2, ks);
    EXPECT_EQ(other.affine_exact, base.affine_exact);
    EXPECT_EQ(other.closed_form_match, base.closed_form_match);
    EXPECT_EQ(other.intercept, base.intercept);
    EXPECT_EQ(other.slope, base.slope);
  }
}

TEST(LinearityProperty, RichaudDegertFamilyIsLinear) {
  FamilySpec rd = rd_n2p1_family();
  for (std::int64_t q : {3, 5}) {
    for (const auto& chi : enumerate_characters(q)) {
      if (chi.is_trivial()) continue;
      for (std::int64_t r = 0; r < q; ++r) {
        std::vector<std::int64_t> ks;
        for (std::int64_t k = 0; k <= 14; ++k) ks.push_back(k);
        LinearityReport rep = verify_linearity(rd, q, chi, r, ks);
        EXPECT_TRUE(rep.affine_exact) << chi.id() << " r=" << r;
        EXPECT_TRUE(rep.closed_form_match) << chi.id() << " r=" << r << " " << rep.closed_form_note;
      }
    }
  }
}

TEST(Linearity, QuadraticDigitControlIsNotAffine) {
  FamilySpec quartic;
  quartic.name = "n4p4";
  quartic.f_coeffs = {4, 0, 0, 0, 1};
  quartic.u_coeffs = {2, 0, 1};
  quartic.v_coeffs = {1};
  quartic.w = 2;
  quartic.acf = {DigitPoly{{0, 0, 1}}};
  quartic.n_constraints.parity = 1;
  EXPECT_FALSE(quartic.is_linear());
  std::vector<std::int64_t> ks;
  for (std::int64_t k = 0; k <= 12; ++k) ks.push_back(k);
  LinearityReport rep = verify_linearity(quartic, 3, DirichletCharacter(3, {1}), 1, ks);
  EXPECT_FALSE(rep.affine_exact);
  EXPECT_FALSE(rep.closed_form_match);
  EXPECT_HECKE_ERROR(closed_form_cd(quartic, 3, 1, 1, 1), InvalidArgument);
}

TEST(Linearity, ClosedFormChi) {
  FamilySpec y = yokoi_family();
  ClosedFormAB cf = closed_form_chi(y, 3, DirichletCharacter(3, {1}), 1);
  EXPECT_EQ(cf.reference_n, 1);
  for (std::int64_t n : {7, 13}) {
    CycloElement L = partial_hecke_L_zero(family_instance(y, n).field, family_instance(y, n).delta,
                                          family_instance(y, n).b, DirichletCharacter(3, {1}));
    EXPECT_EQ(L * Rational(12 * 9), cf.A_chi + cf.B_chi * Rational((n - 1) / 3)) << n;
  }
  ClosedFormAB q5 = closed_form_chi(y, 5, DirichletCharacter(5, {1}), 2);
  EXPECT_TRUE(q5.A_chi.is_integral());
  EXPECT_TRUE(q5.B_chi.is_integral());
}
