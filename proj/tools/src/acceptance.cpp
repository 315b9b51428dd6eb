#include "hecke_cli/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "hecke/biro.hpp"
#include "hecke/error.hpp"
#include "hecke/linearity.hpp"
#include "hecke/shintani.hpp"

namespace hecke::cli {

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kOracleLimit = 1.0;
constexpr double kIdentityLimit = 10.0;
constexpr double kLinearityLimit = 30.0;

constexpr std::uint64_t kWordSeed = 20240229;
constexpr int kRandomWords = 50;
constexpr int kGridMinimum = 200;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

CriterionResult run_one(const std::string& id, const std::string& title, double limit,
                        const std::function<void(Check&)>& body) {
  CriterionResult r;
  r.id = id;
  r.title = title;
  Check check;
  auto t0 = Clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.require(false, std::string("exception: ") + e.what());
  }
  r.seconds = seconds_since(t0);
  if (limit > 0 && r.seconds >= limit) {
    std::ostringstream os;
    os << "took " << r.seconds << " s, limit " << limit << " s";
    check.require(false, os.str());
  }
  r.pass = check.ok;
  r.detail = check.detail.str();
  return r;
}

CycloElement rational_value(const Rational& v) { return CycloElement::constant(1, v); }

MinusCF principal_word(const FieldData& F) { return minus_expand(principal_delta(F)); }

void ac1(Check& c) {
  auto chi = parse_character("q=3;gens=2:1");
  const CycloElement expected = rational_value(Rational(2, 3));
  for (int d : {5, 2}) {
    auto t0 = Clock::now();
    FieldData F = make_field(d);
    CycloElement L = partial_hecke_L_zero(F, principal_delta(F), IdealLattice::unit(F), chi);
    std::int64_t D = to_int64(F.discriminant);
    CycloElement b1 = gen_bernoulli_b1(chi);
    CycloElement b1_twist = gen_bernoulli_b1(3 * D, twisted_by_kronecker(chi, D));
    double dt = seconds_since(t0);
    c.require(L == expected, "d=" + std::to_string(d) + ": L = " + L.to_string());
    c.require(b1 == rational_value(Rational(-1, 3)), "B1(chi) = " + b1.to_string());
    c.require(b1_twist == rational_value(-2), "d=" + std::to_string(d) + ": B1(chi chi_D) = " + b1_twist.to_string());
    c.require(b1 * b1_twist == L, "d=" + std::to_string(d) + ": Bernoulli product differs from L");
    c.require(dt < kOracleLimit, "d=" + std::to_string(d) + " exceeded " + std::to_string(kOracleLimit) + " s");
  }
}

void ac2(Check& c) {
  DirichletCharacter trivial(1, {});
  for (int d : {2, 5}) {
    FieldData F = make_field(d);
    CycloElement L = partial_hecke_L_zero(F, principal_delta(F), IdealLattice::unit(F), trivial);
    c.require(L.is_zero(), "d=" + std::to_string(d) + ": q=1 value " + L.to_string());
    Rational z = partial_zeta_zero(1, 1, 1, principal_word(F));
    c.require(z == 0, "d=" + std::to_string(d) + ": Z(1,1) = " + to_string(z));
  }
}

void ac3(Check& c) {
  Rational z2 = partial_zeta_zero(3, 1, 1, principal_word(make_field(2)));
  Rational z5 = partial_zeta_zero(3, 1, 1, principal_word(make_field(5)));
  c.require(z2 == Rational(2, 9), "d=2: Z(1,1) = " + to_string(z2));
  c.require(z5 == Rational(-1, 9), "d=5: Z(1,1) = " + to_string(z5));
}

void ac4(Check& c) {
  int cells = 0;
  for (int d : {2, 3, 5, 13, 15, 29}) {
    FieldData F = make_field(d);
    MinusCF mcf = principal_word(F);
    for (int q : {2, 3, 5}) {
      for (int C = 1; C <= q; ++C) {
        for (int D = 1; D <= q; ++D) {
          Rational res = yamamoto_identity_residual(F, mcf, q, C, D);
          ++cells;
          c.require(res == 0, "d=" + std::to_string(d) + " q=" + std::to_string(q) + " (" + std::to_string(C) +
                                  "," + std::to_string(D) + "): residual " + to_string(res));
        }
      }
    }
  }
  c.require(cells == 6 * (4 + 9 + 25), "unexpected cell count");
}

void ac5(Check& c) {
  MinusCF conv = plus_to_minus(plus_word({2, 3}));
  c.require(conv.period == Digits({4, 2, 2}), "[[2,3]] did not convert to ((4,2,2))");

  std::mt19937_64 rng(kWordSeed);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> dig(1, 6);
  for (int t = 0; t < kRandomWords; ++t) {
    Digits w(static_cast<std::size_t>(len(rng)));
    for (auto& a : w) a = dig(rng);
    PlusCF p = plus_word(w);
    MinusCF via_conversion = plus_to_minus(p);
    MinusCF via_expansion = minus_expand(evaluate_periodic(p) + Rational(1));
    c.require(via_expansion.purely_periodic() && same_cycle(via_conversion.period, via_expansion.period),
              "conversion disagrees with direct expansion on a random word");
  }
  for (int d : {2, 3, 5, 13, 15}) {
    FieldData F = make_field(d);
    DeltaSequence ds = delta_sequence(F, principal_word(F));
    QuadSurd product = QuadSurd::rational(1, F.d);
    for (const auto& delta : ds.deltas) product = product * delta;
    c.require(product == F.tp_fund_unit, "d=" + std::to_string(d) + ": product of deltas is not the unit");
  }
}

void ac6(Check& c) {
  FamilySpec yokoi = yokoi_family();
  CellAB ab = closed_form_cd(yokoi, 3, 1, 1, 1);
  c.require(ab.A == Rational(-4, 3) && ab.B == -4, "closed form gave (" + to_string(ab.A) + ", " + to_string(ab.B) + ")");
  for (int n : {1, 7, 13}) {
    std::int64_t k = (n - 1) / 3;
    FamilyInstance inst = family_instance(yokoi, n);
    Rational direct = partial_zeta_zero(3, 1, 1, minus_expand(inst.delta));
    Rational closed = (ab.A + k * ab.B) / 12;
    c.require(direct == closed, "n=" + std::to_string(n) + ": direct " + to_string(direct) + " vs closed " +
                                    to_string(closed));
  }
}

void ac7(Check& c) {
  FamilySpec yokoi = yokoi_family();
  auto chi = parse_character("q=5;gens=2:1");
  std::vector<std::int64_t> ks;
  for (std::int64_t k = 1; k <= 12; ++k) ks.push_back(k);
  for (std::int64_t r = 0; r < 5; ++r) {
    LinearityReport rep = verify_linearity(yokoi, 5, chi, r, ks);
    std::string tag = "r=" + std::to_string(r) + ": ";
    c.require(rep.points.size() >= 3, tag + "fewer than 3 admissible k");
    c.require(rep.affine_exact, tag + "not affine-exact");
    c.require(rep.closed_form_match, tag + "closed form mismatch " + rep.closed_form_note);
    for (const auto& p : rep.points) {
      c.require(p.scaled_value.is_integral(), tag + "12q^2 L not integral at n=" + std::to_string(p.n));
    }
  }
}

std::vector<ConditionStarPair> pairs_for(const std::vector<ConditionStarPair>& all, std::int64_t q) {
  std::vector<ConditionStarPair> out;
  for (const auto& p : all) {
    if (p.q == q) out.push_back(p);
  }
  return out;
}

std::string describe(const std::vector<ConditionStarPair>& pairs) {
  std::string s;
  for (const auto& p : pairs) {
    if (!s.empty()) s += ", ";
    s += "(" + std::to_string(p.q) + "," + std::to_string(p.p) + "," + p.chi.id() + ",zeta->" +
         std::to_string(p.realization.image) + ")";
  }
  return s;
}

void ac8a(Check& c) {
  auto q5 = pairs_for(condition_star_search(7, 13), 5);
  c.require(q5.size() == 2, "expected 2 pairs for q=5, got " + std::to_string(q5.size()) + ": " + describe(q5));
  if (q5.size() != 2) return;
  const auto& x = q5[0];
  const auto& y = q5[1];
  c.require(x.p == 5 && y.p == 5, "q=5 pairs must have p=5");
  c.require(x.chi.order() == 4 && y.chi.order() == 4, "q=5 pairs must be quartic");
  // Conjugate characters under their realizations give the same residue map.
  for (std::int64_t a = 1; a < 5; ++a) {
    c.require(x.chi.value(a) * y.chi.value(a) == CycloElement::constant(4, 1), "characters are not conjugate");
    c.require(x.realization.realize(x.chi.value(a)) == y.realization.realize(y.chi.value(a)),
              "realizations do not correspond under conjugation");
  }
}

void ac8b(Check& c) {
  auto q3 = pairs_for(condition_star_search(7, 13), 3);
  c.require(q3.empty(), "unexpected q=3 pairs: " + describe(q3));
  auto wide = pairs_for(condition_star_search(3, 50), 3);
  c.require(wide.empty(), "unexpected q=3 pairs with p <= 50: " + describe(wide));
}

void ac8c(Check& c) {
  auto q7 = pairs_for(condition_star_search(7, 13), 7);
  c.require(q7.empty(), "q=7 pairs found: " + describe(q7));
}

void ac9(Check& c) {
  FamilySpec yokoi = yokoi_family();
  auto q5 = pairs_for(condition_star_search(7, 13), 5);
  c.require(!q5.empty(), "no (5,5) pair available");
  for (std::int64_t n : {5, 7, 13, 17}) {
    FamilyInstance inst = family_instance(yokoi, n);
    ClassNumbers cn = class_numbers(inst.field.d);
    c.require(cn.h == 1 && cn.h_plus == 1, "n=" + std::to_string(n) + ": class numbers not 1");
    const std::int64_t r = n % 5;
    const std::int64_t k = n / 5;
    for (const auto& pair : q5) {
      ResidueReport rep = residue_mod_p(yokoi, pair, r);
      std::string tag = "n=" + std::to_string(n) + " " + pair.chi.id() + ": ";
      c.require((rep.A_image + k * rep.B_image) % 5 == 0, tag + "A + kB not 0 mod 5");
      if (rep.status == ResidueStatus::Determined) {
        c.require(rep.residue && *rep.residue == n % 5, tag + "residue differs from n mod 5");
      }
    }
  }
}

void ac10(Check& c) {
  // x_i in (0, 1] and q x_i integral, over two unit periods of the recursion.
  for (int d : {2, 3, 5, 13, 15, 29}) {
    FieldData F = make_field(d);
    MinusCF mcf = principal_word(F);
    for (int q = 1; q <= 7; ++q) {
      for (int C = 1; C <= q; ++C) {
        for (int D = 1; D <= q; ++D) {
          YamamotoSeq seq = yamamoto_sequence(q, C, D, mcf, 2 * unit_order_mod_q(F, q) * mcf.m());
          for (const auto& x : seq.x) c.require(x > 0 && x <= 1 && is_integer(x * q), "x_i out of (0,1] cap (1/q)Z");
        }
      }
    }
  }

  // Block bridge between the n-dependent recursion and the r-dependent one.
  FamilySpec yokoi = yokoi_family();
  for (std::int64_t q : {3, 5}) {
    for (std::int64_t r = 0; r < q; ++r) {
      int found = 0;
      for (std::int64_t n = (r == 0 ? q : r); found < 2 && n < r + 60 * q; n += q) {
        std::optional<FamilyInstance> inst;
        try {
          inst = family_instance(yokoi, n);
        } catch (const Error&) {
          continue;
        }
        if (yokoi.min_digit(n) < q) continue;
        ++found;
        const MinusCF& mcf = inst->minus;
        const std::int64_t count = half_period_count(yokoi.s());
        for (std::int64_t C = 1; C <= q; ++C) {
          for (std::int64_t D = 1; D <= q; ++D) {
            YamamotoSeq xs = yamamoto_sequence(q, C, D, mcf);
            NuSequence nu = nu_sequence(yokoi, q, r, C, D);
            for (std::int64_t j = 0; j < count; ++j) {
              std::int64_t S = mcf.special_positions[static_cast<std::size_t>(j)];
              std::int64_t G = nu.Gamma[static_cast<std::size_t>(j)];
              std::int64_t g = nu.gamma[static_cast<std::size_t>((2 * j + 1) % yokoi.s())];
              for (std::int64_t i = 0; i <= g; ++i) {
                c.require(xs.x_at(S + i) == nu.nu_at(G + i),
                          "bridge fails at q=" + std::to_string(q) + " n=" + std::to_string(n));
              }
            }
          }
        }
      }
      c.require(found == 2, "fewer than two admissible n for q=" + std::to_string(q) + " r=" + std::to_string(r));
    }
  }

  // Period q inside runs of the digit 2.
  for (std::int64_t n : {9, 13, 21}) {
    FamilyInstance inst = family_instance(yokoi, n);
    const MinusCF& mcf = inst.minus;
    for (std::int64_t q : {3, 5}) {
      for (std::int64_t C = 1; C <= q; ++C) {
        for (std::int64_t D = 1; D <= q; ++D) {
          YamamotoSeq xs = yamamoto_sequence(q, C, D, mcf);
          const std::int64_t m = mcf.m();
          std::int64_t t = 0;
          while (t < m) {
            if (mcf.period[static_cast<std::size_t>(t)] != 2) {
              ++t;
              continue;
            }
            std::int64_t end = t;
            while (end < m && mcf.period[static_cast<std::size_t>(end)] == 2) ++end;
            const std::int64_t run = end - t;
            for (std::int64_t i = t; run >= q && i + q <= end; ++i) {
              c.require(xs.x_at(i + q) == xs.x_at(i), "run period fails at n=" + std::to_string(n));
            }
            t = end;
          }
        }
      }
    }
  }

  // Integrality of the closed-form cells.
  int cases = 0;
  for (const FamilySpec& spec : {yokoi_family(), rd_n2p1_family()}) {
    for (std::int64_t q = 2; q <= 5; ++q) {
      for (std::int64_t r = 0; r < q; ++r) {
        for (std::int64_t C = 1; C <= q; ++C) {
          for (std::int64_t D = 1; D <= q; ++D) {
            CellAB ab = closed_form_cd(spec, q, r, C, D);
            ++cases;
            c.require(is_integer(ab.A * q * q) && is_integer(ab.B * q * q), "q^2 A_CD or q^2 B_CD not integral");
          }
        }
      }
    }
  }
  c.require(cases >= kGridMinimum, "integrality grid has only " + std::to_string(cases) + " cases");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
  struct Entry {
    const char* id;
    const char* title;
    double limit;
    void (*body)(Check&);
  };
  const Entry entries[] = {
      {"1", "L-value oracle for d=5 and d=2 at q=3 equals 2/3", 2 * kOracleLimit, ac1},
      {"2", "q=1 values vanish for d=2,5", 0, ac2},
      {"3", "single-cell values 2/9 and -1/9", 0, ac3},
      {"4", "Yamamoto identity residual is zero on the full grid", kIdentityLimit, ac4},
      {"5", "continued-fraction conversion and unit products", 0, ac5},
      {"6", "closed-form cell (-4/3, -4) matches direct values at n=1,7,13", 0, ac6},
      {"7", "Yokoi family, q=5 quartic character, linear for every r", kLinearityLimit, ac7},
      {"8a", "condition search: q=5 gives exactly the two conjugate (5,5) pairs", 0, ac8a},
      {"8b", "condition search: nothing for q=3", 0, ac8b},
      {"8c", "condition search: nothing for q=7", 0, ac8c},
      {"9", "congruence self-consistency for n=5,7,13,17 with the (5,5) pair", 0, ac9},
      {"10", "recursion, bridge, run-period and integrality property suites", 0, ac10},
  };
  std::vector<CriterionResult> out;
  for (const auto& e : entries) {
    out.push_back(run_one(e.id, e.title, e.limit, e.body));
    if (progress) *progress << format_line(out.back()) << std::endl;
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  AC" << std::left << std::setw(4) << r.id << r.title << "  ["
     << std::fixed << std::setprecision(3) << r.seconds << " s]";
  if (!r.pass && !r.detail.empty()) os << "\n      " << r.detail;
  return os.str();
}

int acceptance_exit_code(const std::vector<CriterionResult>& results,
                         const std::set<std::string>& expected_failures, std::ostream& out) {
  int passed = 0, failed = 0, expected = 0;
  bool ok = true;
  for (const auto& r : results) {
    bool listed = expected_failures.count(r.id) > 0;
    if (r.pass) {
      ++passed;
      if (listed) {
        out << "note: AC" << r.id << " was listed as an expected failure but passed" << std::endl;
        ok = false;
      }
    } else {
      ++failed;
      if (listed) {
        ++expected;
      } else {
        ok = false;
      }
    }
  }
  out << "acceptance: " << passed << " passed, " << failed << " failed";
  if (expected > 0) out << " (" << expected << " known)";
  out << std::endl;
  return ok ? 0 : 1;
}

}  // namespace hecke::cli
