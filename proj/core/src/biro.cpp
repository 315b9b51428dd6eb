#include "hecke/biro.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <tuple>

#include "hecke/error.hpp"
#include "hecke/parallel.hpp"
#include "hecke/shintani.hpp"

namespace hecke {

std::vector<ConditionStarPair> condition_star_search(std::int64_t q_max, std::int64_t p_max) {
  if (q_max < 3 || p_max < 3) throw Error(ErrorKind::InvalidArgument, "search bounds must be >= 3");
  std::vector<std::int64_t> moduli;
  for (std::int64_t q = 3; q <= q_max; q += 2) moduli.push_back(q);
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 3; p <= p_max; p += 2) {
    if (is_prime(p)) primes.push_back(p);
  }
  auto per_q = parallel_map(moduli.size(), [&](std::size_t i) {
    const std::int64_t q = moduli[i];
    std::vector<ConditionStarPair> found;
    for (const auto& chi : enumerate_characters(q)) {
      auto inv = char_invariants(chi);
      if (inv.parity != Parity::Odd || inv.conductor != q) continue;
      CycloElement moment(chi.order());
      for (std::int64_t a = 1; a <= q; ++a) moment += chi.value(a) * Rational(a);
      for (auto p : primes) {
        for (const auto& real : modp_realizations(chi, p)) {
          if (real.realize(moment) != 0) continue;
          found.push_back(ConditionStarPair{q, p, chi, real, moment, 0});
        }
      }
    }
    return found;
  });
  std::vector<ConditionStarPair> out;
  for (auto& v : per_q) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end(), [](const ConditionStarPair& x, const ConditionStarPair& y) {
    return std::make_tuple(x.q, x.p, x.chi.id(), x.realization.image) <
           std::make_tuple(y.q, y.p, y.chi.id(), y.realization.image);
  });
  return out;
}

std::string to_string(ResidueStatus s) {
  switch (s) {
    case ResidueStatus::Determined: return "determined";
    case ResidueStatus::Vacuous: return "vacuous";
    case ResidueStatus::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

ResidueReport residue_mod_p(const FamilySpec& spec, const ConditionStarPair& pair, std::int64_t r) {
  ClosedFormAB cf = closed_form_chi(spec, pair.q, pair.chi, r);
  const std::int64_t p = pair.p;
  ResidueReport rep;
  rep.family = spec.name;
  rep.q = pair.q;
  rep.p = p;
  rep.chi_id = pair.chi.id();
  rep.image = pair.realization.image;
  rep.r = r;
  rep.A_image = pair.realization.realize(cf.A_chi * Rational(kLValueSign));
  rep.B_image = pair.realization.realize(cf.B_chi * Rational(kLValueSign));
  if (rep.B_image != 0) {
    rep.status = ResidueStatus::Determined;
    // k = -A/B (mod p) and n = q k + r.
    std::int64_t k = (p - rep.A_image) % p * mod_inverse(rep.B_image, p) % p;
    rep.residue = ((pair.q % p) * k % p + r % p) % p;
  } else {
    rep.status = rep.A_image == 0 ? ResidueStatus::Indeterminate : ResidueStatus::Vacuous;
  }
  return rep;
}

OracleCheck factorization_oracle_check(const FamilySpec& spec, std::int64_t n, const DirichletCharacter& chi) {
  FamilyInstance inst = family_instance(spec, n);
  ClassNumbers cn = class_numbers(inst.field.d);
  if (cn.h_plus != 1) {
    throw Error(ErrorKind::NarrowClassNotOne, "h+ = " + std::to_string(cn.h_plus) + " for d = " +
                                                  inst.field.d.get_str() + "; oracle needs h+ = 1");
  }
  const std::int64_t D = to_int64(inst.field.discriminant);
  OracleCheck out;
  out.lhs = partial_hecke_L_zero(inst.field, inst.delta, inst.b, chi) * Rational(kLValueSign);
  out.rhs = gen_bernoulli_b1(chi) * gen_bernoulli_b1(chi.modulus() * D, twisted_by_kronecker(chi, D));
  out.equal = out.lhs == out.rhs;
  return out;
}

IntroAB yokoi_intro_ab(std::int64_t q, const DirichletCharacter& chi, std::int64_t r) {
  if (q < 1 || r < 0 || r >= q) throw Error(ErrorKind::InvalidArgument, "need q >= 1 and 0 <= r < q");
  if (chi.modulus() != q) throw Error(ErrorKind::InvalidArgument, "character modulus differs from q");
  IntroAB out;
  out.A = CycloElement(chi.order());
  out.B = CycloElement(chi.order());
  for (std::int64_t C = 0; C < q; ++C) {
    for (std::int64_t D = 0; D < q; ++D) {
      CycloElement f = chi.value(D * D - C * C - r * C * D);
      if (f.is_zero()) continue;
      Integer up = ceil(make_rational(r * C - D, q));
      out.A += f * Rational(up * (C - q));
      out.B += f * Rational(C * (C - q));
    }
  }

  std::optional<ClosedFormAB> cf;
  try {
    cf = closed_form_chi(yokoi_family(), q, chi, r);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoAdmissibleN && e.kind() != ErrorKind::HypothesisFailed) throw;
    return out;
  }
  // Pick rho from the first nonzero closed-form coordinate, then confirm everywhere.
  std::optional<Rational> rho;
  for (const auto& [intro, closed] : {std::pair{&out.A, &cf->A_chi}, std::pair{&out.B, &cf->B_chi}}) {
    const long order = std::lcm(intro->order(), closed->order());
    CycloElement x = intro->lift(order);
    CycloElement y = closed->lift(order);
    for (std::size_t i = 0; i < y.coeffs().size() && !rho; ++i) {
      if (y.coeffs()[i] != 0) rho = x.coeffs()[i] / y.coeffs()[i];
    }
  }
  if (rho && out.A == cf->A_chi * *rho && out.B == cf->B_chi * *rho) out.proportionality = rho;
  return out;
}

}  // namespace hecke
