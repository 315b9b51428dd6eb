#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hecke/cyclo.hpp"

namespace hecke {

/// One canonical generator of (Z/q)*, lifted by CRT to a residue mod q.
struct CharGenerator {
  std::int64_t residue = 1;
  std::int64_t order = 1;
  std::int64_t exponent = 0;  // chi(residue) = zeta_order^exponent
};

class DirichletCharacter {
 public:
  DirichletCharacter() : DirichletCharacter(1, {}) {}
  /// `exponents` follow canonical_generators(q); missing entries default to 0.
  DirichletCharacter(std::int64_t q, std::vector<std::int64_t> exponents);

  std::int64_t modulus() const { return q_; }
  std::int64_t order() const { return order_; }
  const std::vector<CharGenerator>& generators() const { return gens_; }

  /// Exponent e with chi(a) = zeta_order^e, or -1 when gcd(a, q) > 1.
  std::int64_t exponent_of(std::int64_t a) const;
  CycloElement value(std::int64_t a) const;

  bool is_trivial() const { return order_ == 1; }
  /// "q=<q>;gens=g1:e1,g2:e2"
  std::string id() const;

  friend bool operator==(const DirichletCharacter& x, const DirichletCharacter& y) {
    return x.q_ == y.q_ && x.table_ == y.table_;
  }

 private:
  std::int64_t q_;
  std::int64_t order_ = 1;
  std::vector<CharGenerator> gens_;
  std::vector<std::int64_t> table_;
};

/// Canonical generator residues and their orders for (Z/q)*.
std::vector<CharGenerator> canonical_generators(std::int64_t q);

std::vector<DirichletCharacter> enumerate_characters(std::int64_t q);

/// Parses the identifier produced by DirichletCharacter::id().
DirichletCharacter parse_character(const std::string& id);

CycloElement char_eval(const DirichletCharacter& chi, std::int64_t a);

enum class Parity { Even, Odd };

struct CharInvariants {
  Parity parity = Parity::Even;
  std::int64_t conductor = 1;
};

CharInvariants char_invariants(const DirichletCharacter& chi);

bool is_fundamental_discriminant(std::int64_t D);
/// Kronecker symbol (D / b); throws NotFundamental.
int kronecker(std::int64_t D, std::int64_t b);

using CharValueFn = std::function<CycloElement(std::int64_t)>;

/// (1/f) * sum_{a=1}^{f} a * psi(a).
CycloElement gen_bernoulli_b1(std::int64_t f, const CharValueFn& psi);
CycloElement gen_bernoulli_b1(const DirichletCharacter& chi);

/// chi * chi_D as a value function mod q*|D|.
CharValueFn twisted_by_kronecker(const DirichletCharacter& chi, std::int64_t D);

bool is_prime(std::int64_t n);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t mod_inverse(std::int64_t a, std::int64_t mod);

/// Ring map Z[zeta_order] -> F_p sending zeta to `image`.
struct ModPRealization {
  std::int64_t p = 0;
  std::int64_t order = 1;
  std::int64_t image = 1;

  /// Throws InvalidArgument when a coordinate denominator is divisible by p.
  std::int64_t realize(const CycloElement& x) const;
};

/// Every element of exact multiplicative order ord(chi) in F_p, ascending.
std::vector<ModPRealization> modp_realizations(const DirichletCharacter& chi, std::int64_t p);

}  // namespace hecke
