#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hecke/quadfield.hpp"

namespace hecke {

using Digits = std::vector<std::int64_t>;

/// x = a0 + 1/(a1 + 1/(a2 + ...)).
struct PlusCF {
  Digits preperiod;
  Digits period;

  bool purely_periodic() const { return preperiod.empty(); }
  friend bool operator==(const PlusCF&, const PlusCF&) = default;
};

/// x = b0 - 1/(b1 - 1/(b2 - ...)).
struct MinusCF {
  Digits preperiod;
  Digits period;
  /// Filled by plus_to_minus: the source period length s and the positions S_j.
  std::int64_t source_period = 0;
  std::vector<std::int64_t> special_positions;

  bool purely_periodic() const { return preperiod.empty(); }
  std::int64_t m() const { return static_cast<std::int64_t>(period.size()); }
};

/// Minus words compare as digit sequences; conversion metadata is ignored.
inline bool operator==(const MinusCF& x, const MinusCF& y) {
  return x.preperiod == y.preperiod && x.period == y.period;
}

/// Shortest word whose repetition gives `w`.
Digits primitive_period(const Digits& w);

/// True when the periodic words agree up to rotation once reduced to primitive periods.
bool same_cycle(const Digits& x, const Digits& y);

PlusCF plus_expand(const QuadSurd& x);
MinusCF minus_expand(const QuadSurd& x);

/// s*mu(s): s for odd s, s/2 for even s.
std::int64_t half_period_count(std::int64_t s);

PlusCF plus_word(Digits period);
MinusCF minus_word(Digits period);

MinusCF plus_to_minus(const PlusCF& p);

/// `d_hint` skips factoring the discriminant when the field is known.
QuadSurd evaluate_periodic(const PlusCF& word, const std::optional<Integer>& d_hint = std::nullopt);
QuadSurd evaluate_periodic(const MinusCF& word, const std::optional<Integer>& d_hint = std::nullopt);

struct DeltaSequence {
  /// deltas[i-1] holds delta_i for i = 1..m.
  std::vector<QuadSurd> deltas;
  /// A[0] = 1, A[i] = A[i-1] / delta_i.
  std::vector<QuadSurd> A;
};

DeltaSequence delta_sequence(const FieldData& F, const MinusCF& mcf);

}  // namespace hecke
