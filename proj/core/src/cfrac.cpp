#include "hecke/cfrac.hpp"

#include <map>
#include <string>
#include <tuple>

#include "hecke/error.hpp"

namespace hecke {

namespace {

using StateKey = std::tuple<std::string, std::string, std::string>;

StateKey key_of(const QuadSurd& x) { return {x.a().get_str(), x.b().get_str(), x.c().get_str()}; }

QuadSurd one(const Integer& d) { return QuadSurd::rational(1, d); }

// Splits a digit stream into preperiod and period once a state repeats.
void split_at_repeat(const Digits& digits, std::size_t first, Digits& pre, Digits& period) {
  pre.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(first));
  period.assign(digits.begin() + static_cast<std::ptrdiff_t>(first), digits.end());
}

// Period matrix for the fixed-point equation of a purely periodic word.
struct Mobius {
  Integer p = 1, q = 0, r = 0, s = 1;
};

Mobius compose(const Mobius& m, const Integer& digit, int sign) {
  // m * [[digit, sign], [1, 0]]
  return Mobius{m.p * digit + m.q, m.p * sign, m.r * digit + m.s, m.r * sign};
}

QuadSurd fixed_point(const Digits& period, int sign, const std::optional<Integer>& d_hint) {
  if (period.empty()) throw Error(ErrorKind::DegenerateWord, "empty period");
  Mobius m;
  for (auto digit : period) m = compose(m, Integer(digit), sign);
  // x = (p x + q) / (r x + s)  <=>  r x^2 + (s - p) x - q = 0
  Integer A = m.r;
  Integer B = m.s - m.p;
  Integer C = -m.q;
  if (A == 0) throw Error(ErrorKind::DegenerateWord, "period induces a linear equation");
  Integer disc = B * B - 4 * A * C;
  if (disc <= 0 || is_perfect_square(disc)) {
    throw Error(ErrorKind::DegenerateWord, "period has no irrational real fixed point");
  }
  Integer k, core;
  if (d_hint) {
    Integer k2 = disc / *d_hint;
    if (disc % *d_hint != 0 || !is_perfect_square(k2)) {
      throw Error(ErrorKind::InvalidArgument, "word does not lie in Q(sqrt " + d_hint->get_str() + ")");
    }
    k = isqrt(k2);
    core = *d_hint;
  } else {
    square_decompose(disc, k, core);
  }
  QuadSurd r1(-B, k, 2 * A, core);
  QuadSurd r2(-B, -k, 2 * A, core);
  return r1 > r2 ? r1 : r2;
}

QuadSurd apply_preperiod(const Digits& pre, QuadSurd tail, int sign) {
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    QuadSurd inv = one(tail.d()) / tail;
    tail = sign > 0 ? inv + Rational(*it) : QuadSurd::rational(Rational(*it), tail.d()) - inv;
  }
  return tail;
}

}  // namespace

Digits primitive_period(const Digits& w) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < n && repeats; ++i) repeats = w[i] == w[i - len];
    if (repeats) return Digits(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
  }
  return w;
}

bool same_cycle(const Digits& xs, const Digits& ys) {
  const Digits x = primitive_period(xs);
  const Digits y = primitive_period(ys);
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  for (std::size_t shift = 0; shift < x.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) ok = x[(i + shift) % x.size()] == y[i];
    if (ok) return true;
  }
  return false;
}

PlusCF plus_expand(const QuadSurd& x0) {
  if (x0.is_rational()) throw Error(ErrorKind::RationalInput, "plus_expand of a rational number");
  std::map<StateKey, std::size_t> seen;
  Digits digits;
  QuadSurd x = x0;
  while (true) {
    auto [it, inserted] = seen.emplace(key_of(x), digits.size());
    if (!inserted) {
      PlusCF out;
      split_at_repeat(digits, it->second, out.preperiod, out.period);
      bool reduced = x0.sign() > 0 && (x0 - one(x0.d())).sign() > 0 && x0.conj().sign() < 0 &&
                     (x0.conj() + one(x0.d())).sign() > 0;
      HECKE_ASSERT(reduced == out.purely_periodic(), "plus expansion periodicity criterion");
      return out;
    }
    Integer a = x.floor();
    digits.push_back(to_int64(a));
    x = one(x.d()) / (x - Rational(a));
  }
}

MinusCF minus_expand(const QuadSurd& x0) {
  if (x0.is_rational()) throw Error(ErrorKind::RationalInput, "minus_expand of a rational number");
  std::map<StateKey, std::size_t> seen;
  Digits digits;
  QuadSurd x = x0;
  while (true) {
    auto [it, inserted] = seen.emplace(key_of(x), digits.size());
    if (!inserted) {
      MinusCF out;
      split_at_repeat(digits, it->second, out.preperiod, out.period);
      bool reduced = (x0 - one(x0.d())).sign() > 0 && x0.conj().sign() > 0 &&
                     (one(x0.d()) - x0.conj()).sign() > 0;
      HECKE_ASSERT(reduced == out.purely_periodic(), "minus expansion periodicity criterion");
      return out;
    }
    Integer b = x.ceil();
    digits.push_back(to_int64(b));
    x = one(x.d()) / (QuadSurd::rational(Rational(b), x.d()) - x);
  }
}

std::int64_t half_period_count(std::int64_t s) { return s % 2 == 1 ? s : s / 2; }

PlusCF plus_word(Digits period) { return PlusCF{{}, std::move(period)}; }

MinusCF minus_word(Digits period) {
  MinusCF w;
  w.period = std::move(period);
  return w;
}

MinusCF plus_to_minus(const PlusCF& p) {
  if (!p.purely_periodic() || p.period.empty()) {
    throw Error(ErrorKind::NotPurelyPeriodic, "plus_to_minus needs a purely periodic word");
  }
  const auto s = static_cast<std::int64_t>(p.period.size());
  for (auto a : p.period) {
    if (a < 1) throw Error(ErrorKind::InvalidArgument, "plus digits must be >= 1");
  }
  auto a = [&](std::int64_t i) { return p.period[static_cast<std::size_t>(((i % s) + s) % s)]; };
  const std::int64_t count = half_period_count(s);

  std::vector<std::int64_t> S{0};
  for (std::int64_t j = 1; j <= count; ++j) S.push_back(S.back() + a(2 * j - 1));
  const std::int64_t m = S.back();

  std::int64_t m_direct = 0;
  if (s % 2 == 1) {
    for (std::int64_t i = 0; i < s; ++i) m_direct += a(i);
  } else {
    for (std::int64_t i = 1; i < s; i += 2) m_direct += a(i);
  }
  HECKE_ASSERT(m == m_direct, "minus period length formulas disagree");

  MinusCF out;
  out.period.assign(static_cast<std::size_t>(m), 2);
  for (std::int64_t j = 0; j < count; ++j) out.period[static_cast<std::size_t>(S[j])] = a(2 * j) + 2;
  out.source_period = s;
  out.special_positions.assign(S.begin(), S.end() - 1);

  QuadSurd plus_value = evaluate_periodic(p);
  QuadSurd minus_value = evaluate_periodic(out, plus_value.d());
  HECKE_ASSERT(plus_value + Rational(1) == minus_value, "plus/minus conversion certification failed");
  return out;
}

QuadSurd evaluate_periodic(const PlusCF& word, const std::optional<Integer>& d_hint) {
  QuadSurd tail = fixed_point(word.period, +1, d_hint);
  return apply_preperiod(word.preperiod, tail, +1);
}

QuadSurd evaluate_periodic(const MinusCF& word, const std::optional<Integer>& d_hint) {
  QuadSurd tail = fixed_point(word.period, -1, d_hint);
  return apply_preperiod(word.preperiod, tail, -1);
}

DeltaSequence delta_sequence(const FieldData& F, const MinusCF& mcf) {
  if (!mcf.purely_periodic() || mcf.period.empty()) {
    throw Error(ErrorKind::NotPurelyPeriodic, "delta_sequence needs a purely periodic minus word");
  }
  const std::size_t m = mcf.period.size();
  DeltaSequence out;
  for (std::size_t i = 1; i <= m; ++i) {
    Digits rotated(m);
    for (std::size_t j = 0; j < m; ++j) rotated[j] = mcf.period[(i + j) % m];
    out.deltas.push_back(evaluate_periodic(minus_word(rotated), F.d));
  }
  for (std::size_t i = 0; i < m; ++i) {
    // delta_i = b_i - 1/delta_{i+1}; deltas[i] is delta_{i+1}.
    const QuadSurd& cur = out.deltas[(i + m - 1) % m];
    const QuadSurd& next = out.deltas[i];
    HECKE_ASSERT(cur == QuadSurd::rational(Rational(mcf.period[i % m]), F.d) - one(F.d) / next,
                 "cyclic delta relation");
  }
  out.A.push_back(one(F.d));
  QuadSurd product = one(F.d);
  for (const auto& delta : out.deltas) {
    out.A.push_back(out.A.back() / delta);
    product = product * delta;
  }
  if (product != F.tp_fund_unit) {
    throw Error(ErrorKind::UnitMismatch, "product of deltas " + product.to_string() +
                                             " differs from the unit " + F.tp_fund_unit.to_string());
  }
  return out;
}

}  // namespace hecke
