#include "hecke/serialize.hpp"

#include "hecke/error.hpp"

namespace hecke {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, (path.empty() ? std::string("<root>") : path) + ": " + what);
}

Json digits_json(const Digits& d) {
  Json a = Json::array();
  for (auto v : d) a.push_back(v);
  return a;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json poly_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p) {
    if (c.fits_slong_p()) {
      a.push_back(c.get_si());
    } else {
      a.push_back(c.get_str());
    }
  }
  return a;
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(path, std::string("missing key '") + key + "'");
  return *it;
}

std::int64_t int_from_json(const Json& j, const std::string& path) {
  return to_int64(integer_from_json(j, path));
}

IntPoly poly_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) parse_fail(path, "expected a non-empty coefficient array");
  IntPoly p;
  for (std::size_t i = 0; i < j.size(); ++i) p.push_back(integer_from_json(j[i], path + "/" + std::to_string(i)));
  return p;
}

}  // namespace

Json to_json(const Integer& x) { return x.get_str(); }

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const QuadSurd& x) {
  return Json{{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"c", to_json(x.c())}, {"d", to_json(x.d())}};
}

Json to_json(const CycloElement& x) {
  return Json{{"order", x.order()}, {"coeffs", rationals_json(x.coeffs())}};
}

Json to_json(const PlusCF& w) {
  return Json{{"pre", digits_json(w.preperiod)}, {"period", digits_json(w.period)}, {"kind", "plus"}};
}

Json to_json(const MinusCF& w) {
  Json j{{"pre", digits_json(w.preperiod)}, {"period", digits_json(w.period)}, {"kind", "minus"}};
  if (w.source_period > 0) {
    j["m"] = w.m();
    j["s"] = w.source_period;
    j["special_positions"] = w.special_positions;
  }
  return j;
}

Json to_json(const FieldData& F) {
  return Json{{"d", to_json(F.d)},
              {"discriminant", to_json(F.discriminant)},
              {"omega", to_json(F.omega)},
              {"fund_unit", to_json(F.fund_unit)},
              {"fund_unit_norm", F.fund_unit_norm},
              {"tp_fund_unit", to_json(F.tp_fund_unit)}};
}

Json to_json(const IdealLattice& L) {
  return Json{{"A", to_json(L.A())}, {"B", to_json(L.B())}, {"C", to_json(L.C())}};
}

Json to_json(const DeltaSequence& ds) {
  Json deltas = Json::array();
  for (const auto& d : ds.deltas) deltas.push_back(to_json(d));
  Json A = Json::array();
  for (const auto& a : ds.A) A.push_back(to_json(a));
  return Json{{"deltas", deltas}, {"A", A}};
}

Json to_json(const YamamotoSeq& seq) {
  Json y = Json::array();
  for (std::int64_t i = 1; i <= seq.last_index(); ++i) y.push_back(to_json(seq.y_at(i)));
  return Json{{"q", seq.q}, {"C", seq.C}, {"D", seq.D}, {"x", rationals_json(seq.x)}, {"y", y}};
}

Json to_json(const NuSequence& seq) {
  return Json{{"q", seq.q},         {"r", seq.r},         {"C", seq.C},
              {"D", seq.D},         {"nu", rationals_json(seq.nu)},
              {"Gamma", seq.Gamma}, {"gamma", seq.gamma}, {"tau", seq.tau},
              {"d", rationals_json(seq.d)}};
}

Json to_json(const ClosedFormAB& cf) {
  Json cells = Json::array();
  for (std::int64_t C = 1; C <= cf.q; ++C) {
    for (std::int64_t D = 1; D <= cf.q; ++D) {
      auto k = static_cast<std::size_t>((C - 1) * cf.q + (D - 1));
      cells.push_back(Json{{"C", C},
                           {"D", D},
                           {"A_CD", to_json(cf.cells[k].A)},
                           {"B_CD", to_json(cf.cells[k].B)},
                           {"norm_residue", cf.norm_residues[k]},
                           {"F", to_json(cf.F[k])}});
    }
  }
  return Json{{"q", cf.q},          {"r", cf.r},
              {"chi", cf.chi_id},   {"reference_n", cf.reference_n},
              {"A_chi", to_json(cf.A_chi)}, {"B_chi", to_json(cf.B_chi)},
              {"cells", cells}};
}

Json to_json(const LinearityReport& rep) {
  Json points = Json::array();
  for (const auto& p : rep.points) {
    points.push_back(Json{{"k", p.k}, {"n", p.n}, {"scaled_L", to_json(p.scaled_value)}});
  }
  Json skipped = Json::array();
  for (const auto& s : rep.skipped) skipped.push_back(Json{{"k", s.k}, {"reason", s.reason}});
  Json j{{"family", rep.family},
         {"q", rep.q},
         {"chi", rep.chi_id},
         {"r", rep.r},
         {"points", points},
         {"skipped", skipped},
         {"intercept", to_json(rep.intercept)},
         {"slope", to_json(rep.slope)},
         {"A_chi", rep.A_chi ? to_json(*rep.A_chi) : Json(nullptr)},
         {"B_chi", rep.B_chi ? to_json(*rep.B_chi) : Json(nullptr)},
         {"affine_exact", rep.affine_exact},
         {"closed_form_match", rep.closed_form_match},
         {"hypothesis_holds", rep.hypothesis_holds}};
  if (!rep.closed_form_note.empty()) j["closed_form_note"] = rep.closed_form_note;
  return j;
}

Json to_json(const ConditionStarPair& pair) {
  return Json{{"q", pair.q},
              {"p", pair.p},
              {"chi", pair.chi.id()},
              {"order", pair.chi.order()},
              {"image", pair.realization.image},
              {"moment", to_json(pair.moment)},
              {"witness", pair.witness}};
}

Json to_json(const ResidueReport& rep) {
  return Json{{"family", rep.family},
              {"q", rep.q},
              {"p", rep.p},
              {"chi", rep.chi_id},
              {"image", rep.image},
              {"r", rep.r},
              {"A_image", rep.A_image},
              {"B_image", rep.B_image},
              {"status", to_string(rep.status)},
              {"residue", rep.residue ? Json(*rep.residue) : Json(nullptr)}};
}

Json to_json(const OracleCheck& check) {
  return Json{{"lhs", to_json(check.lhs)}, {"rhs", to_json(check.rhs)}, {"equal", check.equal}};
}

Json to_json(const IntroAB& ab) {
  return Json{{"A", to_json(ab.A)},
              {"B", to_json(ab.B)},
              {"proportionality", ab.proportionality ? to_json(*ab.proportionality) : Json(nullptr)}};
}

Json to_json(const FamilySpec& spec) {
  Json acf = Json::array();
  for (const auto& digit : spec.acf) {
    if (digit.is_linear()) {
      acf.push_back(Json{{"alpha", digit.alpha()}, {"beta", digit.beta()}});
    } else {
      acf.push_back(Json{{"coeffs", poly_json(digit.coeffs)}});
    }
  }
  Json forbidden = Json::array();
  for (const auto& [m, r] : spec.n_constraints.forbidden_residues) forbidden.push_back(Json::array({m, r}));
  Json parity = spec.n_constraints.parity ? Json(*spec.n_constraints.parity == 1 ? "odd" : "even") : Json(nullptr);
  return Json{{"name", spec.name},
              {"f_coeffs", poly_json(spec.f_coeffs)},
              {"delta", Json{{"u_coeffs", poly_json(spec.u_coeffs)},
                             {"v_coeffs", poly_json(spec.v_coeffs)},
                             {"w", to_json(spec.w)}}},
              {"acf", acf},
              {"n_constraints", Json{{"parity", parity}, {"forbidden_residues", forbidden}}}};
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const Error& e) {
      parse_fail(path, e.what());
    }
  }
  parse_fail(path, "expected an integer or integer string");
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, path));
  if (!j.is_string()) parse_fail(path, "expected a \"num/den\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    parse_fail(path, e.what());
  }
}

QuadSurd surd_from_json(const Json& j, const std::string& path) {
  Integer a = integer_from_json(member(j, "a", path), path + "/a");
  Integer b = integer_from_json(member(j, "b", path), path + "/b");
  Integer c = integer_from_json(member(j, "c", path), path + "/c");
  Integer d = integer_from_json(member(j, "d", path), path + "/d");
  if (c == 0 || d <= 1) parse_fail(path, "need c != 0 and d > 1");
  return QuadSurd(a, b, c, d);
}

CycloElement cyclo_from_json(const Json& j, const std::string& path) {
  std::int64_t order = int_from_json(member(j, "order", path), path + "/order");
  if (order < 1) parse_fail(path + "/order", "order must be positive");
  const Json& coeffs = member(j, "coeffs", path);
  if (!coeffs.is_array()) parse_fail(path + "/coeffs", "expected an array");
  std::vector<Rational> v;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    v.push_back(rational_from_json(coeffs[i], path + "/coeffs/" + std::to_string(i)));
  }
  if (static_cast<long>(v.size()) != euler_phi(order)) {
    parse_fail(path + "/coeffs", "expected phi(order) = " + std::to_string(euler_phi(order)) + " coefficients");
  }
  return CycloElement(order, std::move(v));
}

FamilySpec family_from_json(const Json& j) {
  FamilySpec spec;
  const Json& name = member(j, "name", "");
  if (!name.is_string()) parse_fail("/name", "expected a string");
  spec.name = name.get<std::string>();
  spec.f_coeffs = poly_from_json(member(j, "f_coeffs", ""), "/f_coeffs");
  const Json& delta = member(j, "delta", "");
  spec.u_coeffs = poly_from_json(member(delta, "u_coeffs", "/delta"), "/delta/u_coeffs");
  spec.v_coeffs = poly_from_json(member(delta, "v_coeffs", "/delta"), "/delta/v_coeffs");
  spec.w = integer_from_json(member(delta, "w", "/delta"), "/delta/w");
  if (spec.w <= 0) parse_fail("/delta/w", "w must be positive");
  const Json& acf = member(j, "acf", "");
  if (!acf.is_array() || acf.empty()) parse_fail("/acf", "expected a non-empty array");
  for (std::size_t i = 0; i < acf.size(); ++i) {
    std::string path = "/acf/" + std::to_string(i);
    if (acf[i].is_object() && acf[i].contains("coeffs")) {
      spec.acf.push_back(DigitPoly{poly_from_json(acf[i]["coeffs"], path + "/coeffs")});
    } else {
      std::int64_t alpha = int_from_json(member(acf[i], "alpha", path), path + "/alpha");
      std::int64_t beta = int_from_json(member(acf[i], "beta", path), path + "/beta");
      spec.acf.push_back(DigitPoly::linear(alpha, beta));
    }
  }
  if (j.contains("n_constraints")) {
    const Json& nc = j["n_constraints"];
    if (!nc.is_object()) parse_fail("/n_constraints", "expected an object");
    if (nc.contains("parity") && !nc["parity"].is_null()) {
      const Json& par = nc["parity"];
      if (par == "odd" || par == 1) {
        spec.n_constraints.parity = 1;
      } else if (par == "even" || par == 0) {
        spec.n_constraints.parity = 0;
      } else {
        parse_fail("/n_constraints/parity", "expected \"odd\", \"even\", 0, 1 or null");
      }
    }
    if (nc.contains("forbidden_residues")) {
      const Json& fr = nc["forbidden_residues"];
      if (!fr.is_array()) parse_fail("/n_constraints/forbidden_residues", "expected an array");
      for (std::size_t i = 0; i < fr.size(); ++i) {
        std::string path = "/n_constraints/forbidden_residues/" + std::to_string(i);
        if (!fr[i].is_array() || fr[i].size() != 2) parse_fail(path, "expected [m, r]");
        std::int64_t m = int_from_json(fr[i][0], path + "/0");
        if (m < 1) parse_fail(path + "/0", "modulus must be positive");
        spec.n_constraints.forbidden_residues.emplace_back(m, int_from_json(fr[i][1], path + "/1"));
      }
    }
  }
  return spec;
}

std::string decimal_display(const Rational& x, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational mag = abs(x) * scale + Rational(1, 2);
  const Integer rounded = floor(mag);
  std::string body = rounded.get_str();
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return (x < 0 && rounded != 0 ? "-" : "") + body;
}

}  // namespace hecke
