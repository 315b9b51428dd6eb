#pragma once

#include <cstdint>
#include <vector>

#include "hecke/cfrac.hpp"
#include "hecke/characters.hpp"
#include "hecke/quadfield.hpp"

namespace hecke {

struct YamamotoSeq {
  std::int64_t q = 1;
  std::int64_t C = 1;
  std::int64_t D = 1;
  /// x[0] = x_{-1}, x[1] = x_0, ..., x[k+1] = x_k.
  std::vector<Rational> x;

  const Rational& x_at(std::int64_t i) const { return x[static_cast<std::size_t>(i + 1)]; }
  /// y_i = 1 - x_{i-1}.
  Rational y_at(std::int64_t i) const { return 1 - x_at(i - 1); }
  std::int64_t last_index() const { return static_cast<std::int64_t>(x.size()) - 2; }
};

/// Runs the recursion for `steps` steps (one minus period when steps = 0).
YamamotoSeq yamamoto_sequence(std::int64_t q, std::int64_t C, std::int64_t D, const MinusCF& mcf,
                              std::int64_t steps = 0);

/// Cone sum for the cell (C, D) over one minus period.
Rational partial_zeta_zero(std::int64_t q, std::int64_t C, std::int64_t D, const MinusCF& mcf);

/// Throws DeltaOutOfRange unless delta > 2 and 0 < delta' < 1.
void check_delta_range(const QuadSurd& delta);

/// Sum over (C, D) in [1, q]^2 of chi(norm residue) * Z(C, D).
CycloElement partial_hecke_L_zero(const FieldData& F, const QuadSurd& delta, const IdealLattice& b,
                                  const DirichletCharacter& chi);

/// Difference between the per-cone Bernoulli aggregate written with delta_i and
/// the digit form, over lambda * m steps.
Rational yamamoto_identity_residual(const FieldData& F, const MinusCF& mcf, std::int64_t q,
                                    std::int64_t C, std::int64_t D);

/// Integer matrix of multiplication by the unit on the basis (1, delta):
/// unit * 1 = m[0] + m[1] delta, unit * delta = m[2] + m[3] delta.
std::vector<Integer> unit_action(const FieldData& F, const QuadSurd& delta);

bool orbit_shift_check(const FieldData& F, const MinusCF& mcf, std::int64_t q, std::int64_t C,
                       std::int64_t D);

}  // namespace hecke
