#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/cfrac.hpp"
#include "hecke/characters.hpp"
#include "hecke/quadfield.hpp"

namespace hecke {

/// Integer polynomial, lowest degree first.
using IntPoly = std::vector<Integer>;

Integer eval_poly(const IntPoly& p, const Integer& n);

/// Polynomial in n giving one plus-expansion digit. Linear digits are alpha*n + beta.
struct DigitPoly {
  IntPoly coeffs;

  static DigitPoly linear(std::int64_t alpha, std::int64_t beta) { return DigitPoly{{beta, alpha}}; }
  bool is_linear() const;
  std::int64_t alpha() const;
  std::int64_t beta() const;
  std::int64_t at(std::int64_t n) const;
};

struct NConstraints {
  /// 0 for even n, 1 for odd n.
  std::optional<int> parity;
  /// Pairs (m, r): n = r (mod m) is excluded.
  std::vector<std::pair<std::int64_t, std::int64_t>> forbidden_residues;

  bool allows(std::int64_t n) const;
};

/// delta(n) = (u(n) + v(n) sqrt(f(n))) / w, with delta(n) - 1 = [[a_0(n), ..., a_{s-1}(n)]].
struct FamilySpec {
  std::string name;
  IntPoly f_coeffs;
  IntPoly u_coeffs;
  IntPoly v_coeffs;
  Integer w = 1;
  std::vector<DigitPoly> acf;
  NConstraints n_constraints;

  std::int64_t s() const { return static_cast<std::int64_t>(acf.size()); }
  bool is_linear() const;
  /// Digit a_i(n) with i taken mod s.
  std::int64_t digit(std::int64_t i, std::int64_t n) const;
  std::int64_t min_digit(std::int64_t n) const;
};

/// n^2 + 4 with delta = (n + 2 + sqrt f) / 2, odd n.
FamilySpec yokoi_family();
/// n^2 + 1 with delta = n + 1 + sqrt f, odd n.
FamilySpec rd_n2p1_family();
/// Resolves a built-in family by name; nullopt when unknown.
std::optional<FamilySpec> builtin_family(const std::string& name);
std::vector<std::string> builtin_family_names();

struct FamilyInstance {
  std::int64_t n = 0;
  FieldData field;
  QuadSurd delta;
  IdealLattice b;
  PlusCF plus;
  MinusCF minus;
};

/// Throws NotAdmissible, NotSquarefree, DeltaOutOfRange, NotAnIdeal or CFMismatch.
FamilyInstance family_instance(const FamilySpec& spec, std::int64_t n);

/// First admissible n >= 1 with n = r (mod q), or nullopt within `search_limit` candidates.
std::optional<FamilyInstance> first_admissible(const FamilySpec& spec, std::int64_t q, std::int64_t r,
                                               std::int64_t search_limit = 200);

struct GammaTau {
  std::int64_t gamma = 0;
  std::int64_t tau = 0;
};

GammaTau gamma_tau(const FamilySpec& spec, std::int64_t i, std::int64_t r, std::int64_t q);

struct NuSequence {
  std::int64_t q = 1, r = 0, C = 1, D = 1;
  /// nu[0] = nu_{-1}, nu[1] = nu_0, ...
  std::vector<Rational> nu;
  /// Gamma_0 .. Gamma_{s mu(s)}.
  std::vector<std::int64_t> Gamma;
  /// gamma_i(r), tau_i(r) for i = 0..s-1.
  std::vector<std::int64_t> gamma;
  std::vector<std::int64_t> tau;
  /// d^l for l = 0 .. s mu(s) - 1.
  std::vector<Rational> d;

  const Rational& nu_at(std::int64_t i) const { return nu[static_cast<std::size_t>(i + 1)]; }
};

NuSequence nu_sequence(const FamilySpec& spec, std::int64_t q, std::int64_t r, std::int64_t C, std::int64_t D);

struct CellAB {
  Rational A;
  Rational B;
};

CellAB closed_form_cd(const FamilySpec& spec, std::int64_t q, std::int64_t r, std::int64_t C, std::int64_t D);

struct ClosedFormAB {
  std::int64_t q = 1, r = 0;
  std::string chi_id;
  /// n used to evaluate the character factors.
  std::int64_t reference_n = 0;
  /// Row-major over (C, D) in [1, q]^2.
  std::vector<CellAB> cells;
  std::vector<std::int64_t> norm_residues;
  std::vector<CycloElement> F;
  CycloElement A_chi;
  CycloElement B_chi;

  const CellAB& cell(std::int64_t C, std::int64_t D) const {
    return cells[static_cast<std::size_t>((C - 1) * q + (D - 1))];
  }
};

/// Throws HypothesisFailed when norm residues vary across sampled n, NoAdmissibleN
/// when no n = r (mod q) instantiates.
ClosedFormAB closed_form_chi(const FamilySpec& spec, std::int64_t q, const DirichletCharacter& chi, std::int64_t r);

/// Norm residue table of one instance, row-major over [1, q]^2.
std::vector<std::int64_t> norm_residue_table(const FamilyInstance& inst, std::int64_t q);

/// True iff the residue table is identical across all admissible sampled k.
bool hypothesis_check_norm(const FamilySpec& spec, std::int64_t q, std::int64_t r,
                           const std::vector<std::int64_t>& k_list);

struct LinearityPoint {
  std::int64_t k = 0;
  std::int64_t n = 0;
  /// 12 q^2 L(0) at n.
  CycloElement scaled_value;
};

struct SkippedK {
  std::int64_t k = 0;
  std::string reason;
};

struct LinearityReport {
  std::string family;
  std::int64_t q = 1;
  std::string chi_id;
  std::int64_t r = 0;
  std::vector<LinearityPoint> points;
  std::vector<SkippedK> skipped;
  CycloElement intercept;
  CycloElement slope;
  std::optional<CycloElement> A_chi;
  std::optional<CycloElement> B_chi;
  bool affine_exact = false;
  bool closed_form_match = false;
  bool hypothesis_holds = false;
  std::string closed_form_note;
};

LinearityReport verify_linearity(const FamilySpec& spec, std::int64_t q, const DirichletCharacter& chi,
                                 std::int64_t r, std::vector<std::int64_t> k_list);

}  // namespace hecke
