#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hecke/quad_surd.hpp"

namespace hecke {

struct FieldData {
  Integer d;
  Integer discriminant;
  QuadSurd omega;
  QuadSurd fund_unit;
  int fund_unit_norm = 0;
  QuadSurd tp_fund_unit;
};

/// Throws NotSquarefree (witness = prime) or InvalidArgument for d <= 1.
FieldData make_field(const Integer& d);

/// Coordinates (x, y) of a field element x + y*omega.
std::pair<Rational, Rational> to_coords(const FieldData& F, const QuadSurd& v);
QuadSurd from_coords(const FieldData& F, const Rational& x, const Rational& y);

/// Full-rank Z-lattice in K, kept in the canonical form [A, B + C*omega] with
/// A, C > 0 and 0 <= B < A (all rational).
class IdealLattice {
 public:
  IdealLattice() = default;

  static IdealLattice from_basis(const FieldData& F, const QuadSurd& alpha, const QuadSurd& beta);
  /// Lattice spanned by an arbitrary generating set (must have rank 2).
  static IdealLattice from_generators(const FieldData& F, const std::vector<QuadSurd>& gens);
  static IdealLattice unit(const FieldData& F);

  const Rational& A() const { return A_; }
  const Rational& B() const { return B_; }
  const Rational& C() const { return C_; }
  const Integer& d() const { return d_; }

  std::pair<QuadSurd, QuadSurd> basis(const FieldData& F) const;
  bool contains(const FieldData& F, const QuadSurd& v) const;
  /// All basis coordinates are integers, i.e. the lattice lies in O.
  bool is_integral() const;

  friend bool operator==(const IdealLattice& x, const IdealLattice& y) {
    return x.d_ == y.d_ && x.A_ == y.A_ && x.B_ == y.B_ && x.C_ == y.C_;
  }
  friend bool operator!=(const IdealLattice& x, const IdealLattice& y) { return !(x == y); }

 private:
  Integer d_ = 0;
  Rational A_, B_, C_;
};

bool is_fractional_ideal(const FieldData& F, const IdealLattice& L);
Rational ideal_norm(const FieldData& F, const IdealLattice& L);
IdealLattice ideal_product(const FieldData& F, const IdealLattice& L, const IdealLattice& M);
IdealLattice ideal_inverse(const FieldData& F, const IdealLattice& L);

/// Smallest lambda >= 1 with eps^lambda = 1 in O/qO, eps the totally positive unit.
std::int64_t unit_order_mod_q(const FieldData& F, std::int64_t q);

/// Norm form N(C + D*delta) * N(b) reduced into [0, q).
std::int64_t norm_residue(const FieldData& F, const IdealLattice& b, const QuadSurd& delta,
                          const Integer& C, const Integer& D, std::int64_t q);

/// Throws IncompatiblePair unless b * [1, delta] = O.
void check_compatible_pair(const FieldData& F, const IdealLattice& b, const QuadSurd& delta);

struct ClassNumbers {
  std::int64_t h = 0;
  std::int64_t h_plus = 0;
};

inline constexpr std::int64_t kDefaultClassNumberBound = 1000000;

/// Counts via cycles of reduced indefinite forms. Throws BoundExceeded above `bound`.
ClassNumbers class_numbers(const Integer& d, std::int64_t bound = kDefaultClassNumberBound);

/// delta generating O = [1, delta] with delta > 2 and 0 < delta' < 1.
QuadSurd principal_delta(const FieldData& F);

}  // namespace hecke
