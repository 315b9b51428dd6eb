#include <gtest/gtest.h>
#include <mpfr.h>

#include "expect_error.hpp"
#include "generators.hpp"
#include "hecke/serialize.hpp"

using namespace hecke;
using hecke::testing::Gen;

namespace {

std::string mpfr_fixed(const Rational& x, int digits) {
  mpfr_t v;
  mpfr_init2(v, 512);
  mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", digits, v);
  std::string s(buf);
  mpfr_free_str(buf);
  mpfr_clear(v);
  return s;
}

}  // namespace

TEST(Serialize, ScalarShapes) {
  EXPECT_EQ(to_json(make_rational(2, 3)), "2/3");
  EXPECT_EQ(to_json(Rational(5)), "5/1");
  EXPECT_EQ(to_json(Integer("123456789012345678901234567890")), "123456789012345678901234567890");
  Json s = to_json(QuadSurd(3, 1, 2, 5));
  EXPECT_EQ(s["a"], "3");
  EXPECT_EQ(s["c"], "2");
  Json c = to_json(CycloElement::zeta_power(4, 1));
  EXPECT_EQ(c["order"], 4);
  EXPECT_EQ(c["coeffs"], Json::array({"0/1", "1/1"}));
}

TEST(SerializeProperty, RoundTrips) {
  Gen g(91);
  for (int t = 0; t < 200; ++t) {
    Rational r = make_rational(g.big(100), abs(g.big(70)) + 1);
    EXPECT_EQ(rational_from_json(Json::parse(to_json(r).dump())), r);
    Integer z = g.big(150);
    EXPECT_EQ(integer_from_json(to_json(z)), z);
    QuadSurd x = g.surd(g.squarefree(2, 1000), 1000, 99);
    EXPECT_EQ(surd_from_json(Json::parse(to_json(x).dump())), x);
    CycloElement e = g.cyclo(g.pick(std::vector<long>{1, 3, 4, 5, 8, 12}), 50, 9);
    EXPECT_EQ(cyclo_from_json(Json::parse(to_json(e).dump())), e);
  }
}

TEST(Serialize, ParseErrorsCarryPaths) {
  try {
    rational_from_json(Json::parse(R"({"x": 1})"), "/value");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("/value"), std::string::npos);
  }
  EXPECT_HECKE_ERROR(rational_from_json("1/0"), ParseError);
  EXPECT_HECKE_ERROR(cyclo_from_json(Json::parse(R"({"order": 4, "coeffs": ["1/1"]})")), ParseError);
  EXPECT_HECKE_ERROR(surd_from_json(Json::parse(R"({"a": "1", "b": "1", "c": "0", "d": "5"})")), ParseError);
}

TEST(Serialize, FamilySpecRoundTrip) {
  for (const auto& name : builtin_family_names()) {
    FamilySpec spec = *builtin_family(name);
    FamilySpec back = family_from_json(Json::parse(to_json(spec).dump()));
    EXPECT_EQ(back.name, spec.name);
    EXPECT_EQ(back.f_coeffs, spec.f_coeffs);
    EXPECT_EQ(back.u_coeffs, spec.u_coeffs);
    EXPECT_EQ(back.v_coeffs, spec.v_coeffs);
    EXPECT_EQ(back.w, spec.w);
    ASSERT_EQ(back.acf.size(), spec.acf.size());
    for (std::size_t i = 0; i < spec.acf.size(); ++i) EXPECT_EQ(back.acf[i].coeffs, spec.acf[i].coeffs);
    EXPECT_EQ(back.n_constraints.parity, spec.n_constraints.parity);
    EXPECT_EQ(back.n_constraints.forbidden_residues, spec.n_constraints.forbidden_residues);
  }
}

TEST(Serialize, FamilySpecErrors) {
  Json good = Json::parse(R"({"name": "x", "f_coeffs": [4, 0, 1],
    "delta": {"u_coeffs": [2, 1], "v_coeffs": [1], "w": 2},
    "acf": [{"alpha": 1, "beta": 0}], "n_constraints": {"parity": "odd"}})");
  EXPECT_NO_THROW(family_from_json(good));
  Json bad = good;
  bad["acf"] = Json::array();
  EXPECT_HECKE_ERROR(family_from_json(bad), ParseError);
  bad = good;
  bad["delta"]["w"] = 0;
  EXPECT_HECKE_ERROR(family_from_json(bad), ParseError);
  bad = good;
  bad["n_constraints"]["parity"] = "sometimes";
  EXPECT_HECKE_ERROR(family_from_json(bad), ParseError);
  bad = good;
  bad.erase("f_coeffs");
  EXPECT_HECKE_ERROR(family_from_json(bad), ParseError);
}

TEST(Serialize, DecimalDisplay) {
  EXPECT_EQ(decimal_display(make_rational(2, 3)), "0.666666666666666666666666666667");
  EXPECT_EQ(decimal_display(make_rational(-1, 9), 5), "-0.11111");
  EXPECT_EQ(decimal_display(Rational(7), 3), "7.000");
  EXPECT_EQ(decimal_display(make_rational(-1, 1000000), 3), "0.000");
}

// Denominators coprime to 10 avoid rounding ties, where conventions could differ.
TEST(SerializeProperty, DecimalDisplayMatchesMpfr) {
  Gen g(92);
  for (int t = 0; t < 300; ++t) {
    Integer den;
    do {
      den = abs(g.big(40)) + 1;
    } while (mpz_divisible_ui_p(den.get_mpz_t(), 2) || mpz_divisible_ui_p(den.get_mpz_t(), 5));
    Rational x = make_rational(g.big(60), den);
    std::string ours = decimal_display(x);
    std::string oracle = mpfr_fixed(x, 30);
    if (oracle.rfind("-0.", 0) == 0 && oracle.find_first_not_of("-0.") == std::string::npos) oracle.erase(0, 1);
    EXPECT_EQ(ours, oracle) << to_string(x);
  }
}

TEST(Serialize, ReportShapes) {
  FieldData F = make_field(5);
  Json f = to_json(F);
  EXPECT_EQ(f["d"], "5");
  EXPECT_TRUE(f.contains("fund_unit"));
  Json w = to_json(plus_to_minus(plus_word({2, 3})));
  EXPECT_EQ(w["period"], Json::array({4, 2, 2}));
  EXPECT_EQ(w["kind"], "minus");
}
