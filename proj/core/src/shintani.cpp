#include "hecke/shintani.hpp"

#include <numeric>

#include "hecke/error.hpp"
#include "hecke/parallel.hpp"

namespace hecke {

namespace {

void check_cell(std::int64_t q, std::int64_t C, std::int64_t D) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1");
  if (C < 1 || C > q || D < 1 || D > q) {
    throw Error(ErrorKind::InvalidArgument, "cell (C, D) must lie in [1, q]^2");
  }
}

void check_periodic(const MinusCF& mcf) {
  if (!mcf.purely_periodic() || mcf.period.empty()) {
    throw Error(ErrorKind::NotPurelyPeriodic, "minus word must be purely periodic");
  }
}

std::int64_t digit(const MinusCF& mcf, std::int64_t i) {
  const auto m = mcf.m();
  return mcf.period[static_cast<std::size_t>(((i % m) + m) % m)];
}

}  // namespace

YamamotoSeq yamamoto_sequence(std::int64_t q, std::int64_t C, std::int64_t D, const MinusCF& mcf,
                              std::int64_t steps) {
  check_cell(q, C, D);
  check_periodic(mcf);
  if (steps <= 0) steps = mcf.m();
  YamamotoSeq seq;
  seq.q = q;
  seq.C = C;
  seq.D = D;
  seq.x.reserve(static_cast<std::size_t>(steps) + 2);
  seq.x.push_back(frac_pos(1 - make_rational(C, q)));
  seq.x.push_back(frac_pos(make_rational(D, q)));
  for (std::int64_t i = 0; i < steps; ++i) {
    const Rational& xi = seq.x_at(i);
    Rational yi = seq.y_at(i);
    seq.x.push_back(frac_pos(digit(mcf, i) * xi + yi));
  }
  for (const auto& v : seq.x) {
    HECKE_ASSERT(v > 0 && v <= 1, "recursion left (0, 1]");
    HECKE_ASSERT(is_integer(v * q), "recursion left (1/q)Z");
  }
  return seq;
}

Rational partial_zeta_zero(std::int64_t q, std::int64_t C, std::int64_t D, const MinusCF& mcf) {
  YamamotoSeq seq = yamamoto_sequence(q, C, D, mcf);
  Rational sum = 0;
  for (std::int64_t i = 1; i <= mcf.m(); ++i) {
    const Rational& x = seq.x_at(i);
    sum += bernoulli1(x) * bernoulli1(seq.y_at(i)) + make_rational(digit(mcf, i), 2) * bernoulli2(x);
  }
  HECKE_ASSERT(is_integer(sum * 12 * q * q), "12 q^2 Z(C, D) must be an integer");
  return sum;
}

void check_delta_range(const QuadSurd& delta) {
  QuadSurd two = QuadSurd::rational(2, delta.d());
  QuadSurd one = QuadSurd::rational(1, delta.d());
  if (delta.is_rational() || (delta - two).sign() <= 0 || delta.conj().sign() <= 0 ||
      (one - delta.conj()).sign() <= 0) {
    throw Error(ErrorKind::DeltaOutOfRange, "need delta > 2 and 0 < delta' < 1, got " + delta.to_string());
  }
}

CycloElement partial_hecke_L_zero(const FieldData& F, const QuadSurd& delta, const IdealLattice& b,
                                  const DirichletCharacter& chi) {
  check_delta_range(delta);
  check_compatible_pair(F, b, delta);
  if (!b.is_integral()) throw Error(ErrorKind::IncompatiblePair, "ideal b must be integral");
  const std::int64_t q = chi.modulus();
  Rational nb = ideal_norm(F, b);
  if (Integer(gcd(nb.get_num(), Integer(q))) != 1) {
    throw Error(ErrorKind::IdealNotCoprime, "N(b) = " + to_string(nb) + " shares a factor with q");
  }
  MinusCF mcf = minus_expand(delta);
  HECKE_ASSERT(mcf.purely_periodic(), "reduced delta must have a purely periodic minus expansion");

  const auto cells = static_cast<std::size_t>(q * q);
  auto terms = parallel_map(cells, [&](std::size_t k) {
    std::int64_t C = static_cast<std::int64_t>(k) / q + 1;
    std::int64_t D = static_cast<std::int64_t>(k) % q + 1;
    std::int64_t res = norm_residue(F, b, delta, C, D, q);
    if (chi.exponent_of(res) < 0) return CycloElement(chi.order());
    return chi.value(res) * partial_zeta_zero(q, C, D, mcf);
  });
  CycloElement total(chi.order());
  for (const auto& t : terms) total += t;
  HECKE_ASSERT((total * Rational(12 * q * q)).is_integral(), "12 q^2 L must have integer coordinates");
  return total;
}

Rational yamamoto_identity_residual(const FieldData& F, const MinusCF& mcf, std::int64_t q,
                                    std::int64_t C, std::int64_t D) {
  DeltaSequence ds = delta_sequence(F, mcf);
  const std::int64_t m = mcf.m();
  const std::int64_t steps = unit_order_mod_q(F, q) * m;
  YamamotoSeq seq = yamamoto_sequence(q, C, D, mcf, steps);
  Rational residual = 0;
  for (std::int64_t i = 1; i <= steps; ++i) {
    const QuadSurd& delta = ds.deltas[static_cast<std::size_t>((i - 1) % m)];
    Rational trace = delta.trace();
    Rational inv_trace = trace / delta.norm();
    const Rational& x = seq.x_at(i);
    residual += trace / 4 * bernoulli2(x) + inv_trace / 4 * bernoulli2(seq.y_at(i));
    residual -= make_rational(digit(mcf, i), 2) * bernoulli2(x);
  }
  return residual;
}

std::vector<Integer> unit_action(const FieldData& F, const QuadSurd& delta) {
  auto coords = [&](const QuadSurd& v) {
    Rational y = v.surd_coeff() / delta.surd_coeff();
    Rational x = (v - delta * y).rational_part();
    HECKE_ASSERT(is_integer(x) && is_integer(y), "unit does not preserve [1, delta]");
    return std::pair<Integer, Integer>{x.get_num(), y.get_num()};
  };
  auto [a, b] = coords(F.tp_fund_unit);
  auto [c, d] = coords(F.tp_fund_unit * delta);
  return {a, b, c, d};
}

bool orbit_shift_check(const FieldData& F, const MinusCF& mcf, std::int64_t q, std::int64_t C,
                       std::int64_t D) {
  check_cell(q, C, D);
  const std::int64_t lambda = unit_order_mod_q(F, q);
  if (lambda == 1) return true;
  const std::int64_t m = mcf.m();
  QuadSurd delta = evaluate_periodic(mcf, F.d);
  auto act = unit_action(F, delta);
  YamamotoSeq full = yamamoto_sequence(q, C, D, mcf, lambda * m);
  Integer c = C, d = D;
  const Integer Q = q;
  for (std::int64_t i = 1; i < lambda; ++i) {
    // unit * (c + d delta) = (c act0 + d act2) + (c act1 + d act3) delta
    Integer nc = act[0] * c + act[2] * d;
    Integer nd = act[1] * c + act[3] * d;
    c = residue_1q(nc, Q);
    d = residue_1q(nd, Q);
    YamamotoSeq shifted = yamamoto_sequence(q, to_int64(c), to_int64(d), mcf);
    for (std::int64_t j = 0; j < m; ++j) {
      if (full.x_at(m * i + j) != shifted.x_at(j)) return false;
    }
  }
  return true;
}

}  // namespace hecke
