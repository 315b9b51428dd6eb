#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke/characters.hpp"
#include "hecke/linearity.hpp"

namespace hecke {

/// Global sign relating the cone-sum value to the product of B_1 numbers.
inline constexpr int kLValueSign = +1;

struct ConditionStarPair {
  std::int64_t q = 0;
  std::int64_t p = 0;
  DirichletCharacter chi;
  ModPRealization realization;
  /// sum_{a=1}^{q} a chi(a)
  CycloElement moment;
  /// Image of the moment in F_p; always 0 for reported pairs.
  std::int64_t witness = 0;
};

/// Odd q <= q_max, odd primes p <= p_max, odd primitive chi mod q, and every
/// realization killing the first moment. Sorted by (q, p, chi id, image).
std::vector<ConditionStarPair> condition_star_search(std::int64_t q_max, std::int64_t p_max);

enum class ResidueStatus { Determined, Vacuous, Indeterminate };

std::string to_string(ResidueStatus s);

struct ResidueReport {
  std::string family;
  std::int64_t q = 0;
  std::int64_t p = 0;
  std::string chi_id;
  std::int64_t image = 0;
  std::int64_t r = 0;
  std::int64_t A_image = 0;
  std::int64_t B_image = 0;
  ResidueStatus status = ResidueStatus::Indeterminate;
  /// n mod p forced on class-number-one members n = r (mod q); set when determined.
  std::optional<std::int64_t> residue;
};

ResidueReport residue_mod_p(const FamilySpec& spec, const ConditionStarPair& pair, std::int64_t r);

struct OracleCheck {
  CycloElement lhs;
  CycloElement rhs;
  bool equal = false;
};

/// Compares the cone-sum L-value with B_1(chi) * B_1(chi chi_D). Requires h+ = 1.
OracleCheck factorization_oracle_check(const FamilySpec& spec, std::int64_t n, const DirichletCharacter& chi);

struct IntroAB {
  CycloElement A;
  CycloElement B;
  /// rho with (A, B) = rho * (A_chi, B_chi); nullopt when no such rational exists.
  std::optional<Rational> proportionality;
};

IntroAB yokoi_intro_ab(std::int64_t q, const DirichletCharacter& chi, std::int64_t r);

}  // namespace hecke
