#include "hecke/linearity.hpp"

#include <algorithm>

#include "hecke/error.hpp"
#include "hecke/parallel.hpp"
#include "hecke/shintani.hpp"

namespace hecke {

Integer eval_poly(const IntPoly& p, const Integer& n) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * n + *it;
  return acc;
}

bool DigitPoly::is_linear() const {
  for (std::size_t i = 2; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) return false;
  }
  return true;
}

std::int64_t DigitPoly::alpha() const {
  if (!is_linear()) throw Error(ErrorKind::InvalidArgument, "digit is not linear in n");
  return coeffs.size() > 1 ? to_int64(coeffs[1]) : 0;
}

std::int64_t DigitPoly::beta() const { return coeffs.empty() ? 0 : to_int64(coeffs[0]); }

std::int64_t DigitPoly::at(std::int64_t n) const { return to_int64(eval_poly(coeffs, Integer(static_cast<long>(n)))); }

bool NConstraints::allows(std::int64_t n) const {
  if (parity && ((n % 2) + 2) % 2 != *parity) return false;
  for (const auto& [m, r] : forbidden_residues) {
    if (m > 0 && ((n - r) % m) == 0) return false;
  }
  return true;
}

bool FamilySpec::is_linear() const {
  return std::all_of(acf.begin(), acf.end(), [](const DigitPoly& p) { return p.is_linear(); });
}

std::int64_t FamilySpec::digit(std::int64_t i, std::int64_t n) const {
  const std::int64_t len = s();
  if (len == 0) throw Error(ErrorKind::InvalidArgument, "family has no digits");
  return acf[static_cast<std::size_t>(((i % len) + len) % len)].at(n);
}

std::int64_t FamilySpec::min_digit(std::int64_t n) const {
  std::int64_t best = digit(0, n);
  for (std::int64_t i = 1; i < s(); ++i) best = std::min(best, digit(i, n));
  return best;
}

FamilySpec yokoi_family() {
  FamilySpec spec;
  spec.name = "yokoi";
  spec.f_coeffs = {4, 0, 1};
  spec.u_coeffs = {2, 1};
  spec.v_coeffs = {1};
  spec.w = 2;
  spec.acf = {DigitPoly::linear(1, 0)};
  spec.n_constraints.parity = 1;
  return spec;
}

FamilySpec rd_n2p1_family() {
  FamilySpec spec;
  spec.name = "rd-n2p1";
  spec.f_coeffs = {1, 0, 1};
  spec.u_coeffs = {1, 1};
  spec.v_coeffs = {1};
  spec.w = 1;
  spec.acf = {DigitPoly::linear(2, 0)};
  spec.n_constraints.parity = 1;
  return spec;
}

std::optional<FamilySpec> builtin_family(const std::string& name) {
  if (name == "yokoi") return yokoi_family();
  if (name == "rd-n2p1") return rd_n2p1_family();
  return std::nullopt;
}

std::vector<std::string> builtin_family_names() { return {"yokoi", "rd-n2p1"}; }

FamilyInstance family_instance(const FamilySpec& spec, std::int64_t n) {
  if (!spec.n_constraints.allows(n)) {
    throw Error(ErrorKind::NotAdmissible, "n = " + std::to_string(n) + " violates the family constraints");
  }
  const Integer N = static_cast<long>(n);
  Integer f = eval_poly(spec.f_coeffs, N);
  if (f <= 1) throw Error(ErrorKind::NotAdmissible, "f(" + std::to_string(n) + ") = " + f.get_str() + " is not > 1");
  Integer p = square_factor(f);
  if (p != 0) {
    throw Error(ErrorKind::NotSquarefree,
                "f(" + std::to_string(n) + ") = " + f.get_str() + " is divisible by " + p.get_str() + "^2",
                f.get_str());
  }
  Integer u = eval_poly(spec.u_coeffs, N);
  Integer v = eval_poly(spec.v_coeffs, N);
  if (v == 0 || spec.w == 0) throw Error(ErrorKind::DeltaOutOfRange, "delta(n) is rational");

  FamilyInstance inst;
  inst.n = n;
  inst.field = make_field(f);
  inst.delta = QuadSurd(u, v, spec.w, f);
  check_delta_range(inst.delta);
  const FieldData& F = inst.field;
  IdealLattice L = IdealLattice::from_basis(F, QuadSurd::rational(1, f), inst.delta);
  if (!is_fractional_ideal(F, L)) {
    throw Error(ErrorKind::NotAnIdeal, "[1, delta(" + std::to_string(n) + ")] is not an O-module");
  }
  inst.b = ideal_inverse(F, L);

  Digits expected;
  for (std::int64_t i = 0; i < spec.s(); ++i) expected.push_back(spec.digit(i, n));
  inst.plus = plus_expand(inst.delta - Rational(1));
  const auto& actual = inst.plus.period;
  bool match = inst.plus.purely_periodic() && !actual.empty() && expected.size() % actual.size() == 0;
  for (std::size_t i = 0; match && i < expected.size(); ++i) match = expected[i] == actual[i % actual.size()];
  if (!match) {
    std::string got, want;
    for (auto a : actual) got += std::to_string(a) + " ";
    for (auto a : expected) want += std::to_string(a) + " ";
    throw Error(ErrorKind::CFMismatch, "delta(" + std::to_string(n) + ") - 1 expands to [[ " + got +
                                           "]], family digits give [[ " + want + "]]");
  }
  inst.minus = plus_to_minus(plus_word(expected));
  return inst;
}

namespace {

bool is_skip(const Error& e, const FamilySpec& spec, std::int64_t n) {
  switch (e.kind()) {
    case ErrorKind::NotAdmissible:
    case ErrorKind::NotSquarefree:
    case ErrorKind::DeltaOutOfRange:
      return true;
    case ErrorKind::CFMismatch:
      return spec.min_digit(n) < 1;
    default:
      return false;
  }
}

std::int64_t reduce_mod(std::int64_t r, std::int64_t q) { return ((r % q) + q) % q; }

void check_qr(std::int64_t q, std::int64_t r) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1");
  if (r < 0 || r >= q) throw Error(ErrorKind::InvalidArgument, "residue r must lie in [0, q)");
}

// Admissible instances n = r (mod q), n >= 1, in increasing order.
std::vector<FamilyInstance> sample_instances(const FamilySpec& spec, std::int64_t q, std::int64_t r,
                                             std::size_t want, std::int64_t search_limit) {
  std::vector<FamilyInstance> out;
  std::int64_t n = r >= 1 ? r : r + q;
  for (std::int64_t t = 0; t < search_limit && out.size() < want; ++t, n += q) {
    try {
      out.push_back(family_instance(spec, n));
    } catch (const Error& e) {
      if (!is_skip(e, spec, n)) throw;
    }
  }
  return out;
}

}  // namespace

std::optional<FamilyInstance> first_admissible(const FamilySpec& spec, std::int64_t q, std::int64_t r,
                                               std::int64_t search_limit) {
  check_qr(q, r);
  auto v = sample_instances(spec, q, r, 1, search_limit);
  if (v.empty()) return std::nullopt;
  return v.front();
}

GammaTau gamma_tau(const FamilySpec& spec, std::int64_t i, std::int64_t r, std::int64_t q) {
  check_qr(q, r);
  std::int64_t a = spec.digit(i, r);
  GammaTau gt;
  gt.gamma = residue_1q(a, q);
  gt.tau = (a - gt.gamma) / q;
  return gt;
}

NuSequence nu_sequence(const FamilySpec& spec, std::int64_t q, std::int64_t r, std::int64_t C, std::int64_t D) {
  check_qr(q, r);
  if (C < 1 || C > q || D < 1 || D > q) throw Error(ErrorKind::InvalidArgument, "cell (C, D) must lie in [1, q]^2");
  NuSequence seq;
  seq.q = q;
  seq.r = r;
  seq.C = C;
  seq.D = D;
  const std::int64_t s = spec.s();
  for (std::int64_t i = 0; i < s; ++i) {
    auto gt = gamma_tau(spec, i, r, q);
    seq.gamma.push_back(gt.gamma);
    seq.tau.push_back(gt.tau);
  }
  auto gam = [&](std::int64_t i) { return seq.gamma[static_cast<std::size_t>(reduce_mod(i, s))]; };
  const std::int64_t count = half_period_count(s);
  seq.Gamma.push_back(0);
  for (std::int64_t j = 1; j <= count; ++j) seq.Gamma.push_back(seq.Gamma.back() + gam(2 * j - 1));

  std::vector<std::int64_t> c(static_cast<std::size_t>(seq.Gamma.back()) + 1, 2);
  for (std::int64_t j = 0; j <= count; ++j) c[static_cast<std::size_t>(seq.Gamma[j])] = gam(2 * j) + 2;

  seq.nu.push_back(make_rational(q - C, q));
  seq.nu.push_back(frac_pos(make_rational(D, q)));
  for (std::int64_t i = 0; i < seq.Gamma.back(); ++i) {
    seq.nu.push_back(frac_pos(c[static_cast<std::size_t>(i)] * seq.nu_at(i) - seq.nu_at(i - 1)));
  }
  for (std::int64_t l = 0; l < count; ++l) {
    std::int64_t g = seq.Gamma[static_cast<std::size_t>(l)];
    seq.d.push_back(frac_pos(seq.nu_at(g + 1) - seq.nu_at(g)));
  }
  return seq;
}

CellAB closed_form_cd(const FamilySpec& spec, std::int64_t q, std::int64_t r, std::int64_t C, std::int64_t D) {
  if (!spec.is_linear()) throw Error(ErrorKind::InvalidArgument, "closed form needs digits linear in n");
  NuSequence seq = nu_sequence(spec, q, r, C, D);
  const std::int64_t s = spec.s();
  const std::int64_t count = half_period_count(s);
  auto alpha = [&](std::int64_t i) { return spec.acf[static_cast<std::size_t>(reduce_mod(i, s))].alpha(); };
  auto G = [&](std::int64_t l) { return seq.Gamma[static_cast<std::size_t>(l)]; };
  auto nu = [&](std::int64_t i) -> const Rational& { return seq.nu_at(i); };

  Rational A = 0;
  Rational B = 0;
  for (std::int64_t l = 1; l <= count; ++l) {
    const Rational& v = nu(G(l));
    A += -12 * bernoulli1(v) * bernoulli1(nu(G(l) - 1)) + 6 * (spec.digit(2 * l, r) + 2) * bernoulli2(v);
    B += 6 * q * alpha(2 * l) * bernoulli2(v);
  }
  for (std::int64_t l = 0; l < count; ++l) {
    const Rational& d = seq.d[static_cast<std::size_t>(l)];
    const Rational& base = nu(G(l));
    std::int64_t g = seq.gamma[static_cast<std::size_t>(reduce_mod(2 * l + 1, s))];
    std::int64_t t = seq.tau[static_cast<std::size_t>(reduce_mod(2 * l + 1, s))];
    Rational block = 6 * (q * d * d + (1 - 2 * d) * Rational(floor_strict(base + d * q))) - q;
    A += 6 * ((g - 1) * d * d + (1 - 2 * d) * Rational(floor_strict(base + d * (g - 1))) +
              bernoulli2(nu(G(l + 1) - 1)) - bernoulli2(base)) -
         g + 1 + t * block;
    B += alpha(2 * l + 1) * block;
  }
  HECKE_ASSERT(is_integer(A * q * q) && is_integer(B * q * q), "q^2 A_CD and q^2 B_CD must be integers");
  return CellAB{A, B};
}

std::vector<std::int64_t> norm_residue_table(const FamilyInstance& inst, std::int64_t q) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(q * q));
  for (std::int64_t C = 1; C <= q; ++C) {
    for (std::int64_t D = 1; D <= q; ++D) out.push_back(norm_residue(inst.field, inst.b, inst.delta, C, D, q));
  }
  return out;
}

ClosedFormAB closed_form_chi(const FamilySpec& spec, std::int64_t q, const DirichletCharacter& chi, std::int64_t r) {
  check_qr(q, r);
  if (chi.modulus() != q) throw Error(ErrorKind::InvalidArgument, "character modulus differs from q");
  auto samples = sample_instances(spec, q, r, 4, 200);
  if (samples.empty()) {
    throw Error(ErrorKind::NoAdmissibleN, "no admissible n = " + std::to_string(r) + " mod " + std::to_string(q));
  }
  ClosedFormAB out;
  out.q = q;
  out.r = r;
  out.chi_id = chi.id();
  out.reference_n = samples.front().n;
  out.norm_residues = norm_residue_table(samples.front(), q);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (norm_residue_table(samples[i], q) != out.norm_residues) {
      throw Error(ErrorKind::HypothesisFailed, "norm residues mod " + std::to_string(q) + " differ between n = " +
                                                   std::to_string(samples.front().n) + " and n = " +
                                                   std::to_string(samples[i].n));
    }
  }
  out.cells = parallel_map(static_cast<std::size_t>(q * q), [&](std::size_t k) {
    return closed_form_cd(spec, q, r, static_cast<std::int64_t>(k) / q + 1, static_cast<std::int64_t>(k) % q + 1);
  });
  out.A_chi = CycloElement(chi.order());
  out.B_chi = CycloElement(chi.order());
  const Rational q2 = q * q;
  for (std::size_t k = 0; k < out.cells.size(); ++k) {
    CycloElement f = chi.value(out.norm_residues[k]);
    out.F.push_back(f);
    out.A_chi += f * (q2 * out.cells[k].A);
    out.B_chi += f * (q2 * out.cells[k].B);
  }
  return out;
}

bool hypothesis_check_norm(const FamilySpec& spec, std::int64_t q, std::int64_t r,
                           const std::vector<std::int64_t>& k_list) {
  check_qr(q, r);
  std::vector<std::int64_t> ks = k_list;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  std::optional<std::vector<std::int64_t>> reference;
  std::size_t used = 0;
  bool same = true;
  for (auto k : ks) {
    std::int64_t n = q * k + r;
    if (n < 1) continue;
    std::optional<FamilyInstance> inst;
    try {
      inst = family_instance(spec, n);
    } catch (const Error& e) {
      if (!is_skip(e, spec, n)) throw;
      continue;
    }
    auto table = norm_residue_table(*inst, q);
    ++used;
    if (!reference) {
      reference = std::move(table);
    } else if (table != *reference) {
      same = false;
    }
  }
  if (used < 2) throw Error(ErrorKind::InsufficientSamples, "hypothesis check needs at least two admissible k");
  return same;
}

LinearityReport verify_linearity(const FamilySpec& spec, std::int64_t q, const DirichletCharacter& chi,
                                 std::int64_t r, std::vector<std::int64_t> k_list) {
  check_qr(q, r);
  if (chi.modulus() != q) throw Error(ErrorKind::InvalidArgument, "character modulus differs from q");
  std::sort(k_list.begin(), k_list.end());
  k_list.erase(std::unique(k_list.begin(), k_list.end()), k_list.end());

  LinearityReport rep;
  rep.family = spec.name;
  rep.q = q;
  rep.chi_id = chi.id();
  rep.r = r;
  std::vector<FamilyInstance> used;
  for (auto k : k_list) {
    std::int64_t n = q * k + r;
    if (n < 1) {
      rep.skipped.push_back({k, "n < 1"});
      continue;
    }
    try {
      FamilyInstance inst = family_instance(spec, n);
      if (inst.plus.period.empty() || spec.min_digit(n) < q) {
        rep.skipped.push_back({k, "min digit below q"});
        continue;
      }
      used.push_back(std::move(inst));
    } catch (const Error& e) {
      if (!is_skip(e, spec, n)) throw;
      rep.skipped.push_back({k, std::string(to_string(e.kind()))});
    }
  }
  if (used.size() < 3) {
    throw Error(ErrorKind::InsufficientSamples, "need at least 3 admissible k with digits >= q, got " +
                                                    std::to_string(used.size()));
  }
  const Rational scale = 12 * q * q;
  for (const auto& inst : used) {
    CycloElement L = partial_hecke_L_zero(inst.field, inst.delta, inst.b, chi);
    rep.points.push_back({(inst.n - r) / q, inst.n, L * scale});
  }
  const auto& p0 = rep.points[0];
  const auto& p1 = rep.points[1];
  rep.slope = (p1.scaled_value - p0.scaled_value) * make_rational(1, p1.k - p0.k);
  rep.intercept = p0.scaled_value - rep.slope * Rational(p0.k);
  rep.affine_exact = true;
  for (std::size_t i = 2; i < rep.points.size(); ++i) {
    const auto& p = rep.points[i];
    if (rep.intercept + rep.slope * Rational(p.k) != p.scaled_value) rep.affine_exact = false;
  }

  auto reference = norm_residue_table(used.front(), q);
  rep.hypothesis_holds = std::all_of(used.begin(), used.end(),
                                     [&](const FamilyInstance& inst) { return norm_residue_table(inst, q) == reference; });

  if (!spec.is_linear()) {
    rep.closed_form_note = "digits are not linear in n";
  } else {
    try {
      ClosedFormAB cf = closed_form_chi(spec, q, chi, r);
      rep.A_chi = cf.A_chi;
      rep.B_chi = cf.B_chi;
      rep.closed_form_match = cf.A_chi == rep.intercept && cf.B_chi == rep.slope;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HypothesisFailed && e.kind() != ErrorKind::NoAdmissibleN) throw;
      rep.closed_form_note = e.what();
    }
  }
  return rep;
}

}  // namespace hecke
