#include "hecke/characters.hpp"

#include <numeric>
#include <tuple>
#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod == 1) return 0;
  __int128 result = 1;
  __int128 b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t mod) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = mod, new_r = ((a % mod) + mod) % mod;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (r != 1) throw Error(ErrorKind::InvalidArgument, "value not invertible modulo " + std::to_string(mod));
  return t < 0 ? t + mod : t;
}

namespace {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t mult_order(std::int64_t g, std::int64_t mod) {
  std::int64_t x = g % mod;
  for (std::int64_t k = 1;; ++k) {
    if (x == 1 % mod) return k;
    x = static_cast<std::int64_t>(static_cast<__int128>(x) * g % mod);
  }
}

// x = g mod pk and x = 1 mod rest.
std::int64_t crt_lift(std::int64_t g, std::int64_t pk, std::int64_t rest) {
  if (rest == 1) return g % pk;
  std::int64_t q = pk * rest;
  // x = 1 + rest * t, with rest * t = g - 1 (mod pk)
  std::int64_t t = static_cast<std::int64_t>(static_cast<__int128>(((g - 1) % pk + pk) % pk) *
                                             mod_inverse(rest, pk) % pk);
  return (1 + rest * t) % q;
}

}  // namespace

std::vector<CharGenerator> canonical_generators(std::int64_t q) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "character modulus must be >= 1");
  std::vector<CharGenerator> gens;
  for (auto [p, k] : factorize(q)) {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    std::int64_t rest = q / pk;
    auto push = [&](std::int64_t g, std::int64_t order) {
      gens.push_back(CharGenerator{crt_lift(g, pk, rest), order, 0});
    };
    if (p == 2) {
      if (k == 2) push(3, 2);
      if (k >= 3) {
        push(pk - 1, 2);
        push(5, pk / 4);
      }
      continue;
    }
    std::int64_t phi = pk / p * (p - 1);
    for (std::int64_t g = 2; g < pk; ++g) {
      if (g % p != 0 && mult_order(g, pk) == phi) {
        push(g, phi);
        break;
      }
    }
  }
  return gens;
}

DirichletCharacter::DirichletCharacter(std::int64_t q, std::vector<std::int64_t> exponents)
    : q_(q), gens_(canonical_generators(q)) {
  if (exponents.size() > gens_.size()) {
    throw Error(ErrorKind::InvalidArgument, "too many generator exponents for modulus " + std::to_string(q));
  }
  order_ = 1;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    std::int64_t ord = gens_[i].order;
    std::int64_t e = i < exponents.size() ? exponents[i] : 0;
    gens_[i].exponent = ((e % ord) + ord) % ord;
    order_ = std::lcm(order_, ord / std::gcd(gens_[i].exponent, ord));
  }
  // chi(g_i) = zeta_order^scaled[i]
  std::vector<std::int64_t> scaled;
  for (const auto& g : gens_) {
    std::int64_t common = std::gcd(g.exponent, g.order);
    scaled.push_back(g.exponent == 0 ? 0 : (g.exponent / common) * (order_ / (g.order / common)));
  }
  table_.assign(static_cast<std::size_t>(q), -1);
  // Walk every product g_1^l_1 ... g_k^l_k with mixed-radix counters.
  std::vector<std::int64_t> l(gens_.size(), 0);
  while (true) {
    std::int64_t residue = 1 % q;
    std::int64_t expo = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      residue = static_cast<std::int64_t>(static_cast<__int128>(residue) *
                                          mod_pow(gens_[i].residue, l[i], q) % q);
      expo += scaled[i] * l[i];
    }
    table_[static_cast<std::size_t>(residue)] = expo % order_;
    std::size_t i = 0;
    while (i < gens_.size() && ++l[i] == gens_[i].order) l[i++] = 0;
    if (i == gens_.size()) break;
  }
}

std::int64_t DirichletCharacter::exponent_of(std::int64_t a) const {
  return table_[static_cast<std::size_t>(((a % q_) + q_) % q_)];
}

CycloElement DirichletCharacter::value(std::int64_t a) const {
  std::int64_t e = exponent_of(a);
  if (e < 0) return CycloElement(order_);
  return CycloElement::zeta_power(order_, e);
}

std::string DirichletCharacter::id() const {
  std::ostringstream os;
  os << "q=" << q_ << ";gens=";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ',';
    os << gens_[i].residue << ':' << gens_[i].exponent;
  }
  return os.str();
}

std::vector<DirichletCharacter> enumerate_characters(std::int64_t q) {
  auto gens = canonical_generators(q);
  std::vector<DirichletCharacter> out;
  std::vector<std::int64_t> e(gens.size(), 0);
  while (true) {
    out.emplace_back(q, e);
    std::size_t i = 0;
    while (i < gens.size() && ++e[i] == gens[i].order) e[i++] = 0;
    if (i == gens.size()) break;
  }
  return out;
}

DirichletCharacter parse_character(const std::string& id) {
  auto fail = [&](const std::string& why) -> DirichletCharacter {
    throw Error(ErrorKind::ParseError, "bad character id '" + id + "': " + why);
  };
  if (id.rfind("q=", 0) != 0) return fail("expected 'q=' prefix");
  auto semi = id.find(';');
  if (semi == std::string::npos) return fail("expected ';gens='");
  std::int64_t q = 0;
  try {
    q = std::stoll(id.substr(2, semi - 2));
  } catch (...) {
    return fail("modulus is not an integer");
  }
  if (q < 1) return fail("modulus must be >= 1");
  std::string rest = id.substr(semi + 1);
  if (rest.rfind("gens=", 0) != 0) return fail("expected 'gens='");
  rest = rest.substr(5);
  auto gens = canonical_generators(q);
  std::vector<std::int64_t> exps(gens.size(), 0);
  std::vector<bool> seen(gens.size(), false);
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) return fail("generator entry '" + item + "' lacks ':'");
    std::int64_t g = 0, e = 0;
    try {
      g = std::stoll(item.substr(0, colon));
      e = std::stoll(item.substr(colon + 1));
    } catch (...) {
      return fail("generator entry '" + item + "' is not numeric");
    }
    std::size_t k = 0;
    while (k < gens.size() && gens[k].residue != ((g % q) + q) % q) ++k;
    if (k == gens.size()) return fail(std::to_string(g) + " is not a canonical generator mod " + std::to_string(q));
    if (seen[k]) return fail("generator listed twice");
    seen[k] = true;
    exps[k] = e;
  }
  return DirichletCharacter(q, exps);
}

CycloElement char_eval(const DirichletCharacter& chi, std::int64_t a) { return chi.value(a); }

CharInvariants char_invariants(const DirichletCharacter& chi) {
  const std::int64_t q = chi.modulus();
  CharInvariants inv;
  std::int64_t e = chi.exponent_of(q - 1);
  inv.parity = e == 0 ? Parity::Even : Parity::Odd;
  for (std::int64_t f = 1; f <= q; ++f) {
    if (q % f != 0) continue;
    bool factors = true;
    for (std::int64_t a = 1; a <= q && factors; a += f) {
      if (std::gcd(a, q) == 1 && chi.exponent_of(a) != 0) factors = false;
    }
    if (factors) {
      inv.conductor = f;
      break;
    }
  }
  return inv;
}

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0) return false;
  if (D == 1) return true;
  auto squarefree = [](std::int64_t n) {
    n = n < 0 ? -n : n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % (p * p) == 0) return false;
    }
    return true;
  };
  std::int64_t r = ((D % 4) + 4) % 4;
  if (r == 1) return squarefree(D);
  if (r != 0) return false;
  std::int64_t m = D / 4;
  std::int64_t mr = ((m % 4) + 4) % 4;
  return (mr == 2 || mr == 3) && squarefree(m);
}

int kronecker(std::int64_t D, std::int64_t b) {
  if (!is_fundamental_discriminant(D)) {
    throw Error(ErrorKind::NotFundamental, std::to_string(D) + " is not a fundamental discriminant");
  }
  Integer zd = static_cast<long>(D);
  Integer zb = static_cast<long>(b);
  return mpz_kronecker(zd.get_mpz_t(), zb.get_mpz_t());
}

CycloElement gen_bernoulli_b1(std::int64_t f, const CharValueFn& psi) {
  if (f < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1");
  CycloElement sum;
  for (std::int64_t a = 1; a <= f; ++a) sum += psi(a) * Rational(a);
  return sum * make_rational(1, f);
}

CycloElement gen_bernoulli_b1(const DirichletCharacter& chi) {
  return gen_bernoulli_b1(chi.modulus(), [&](std::int64_t a) { return chi.value(a); });
}

CharValueFn twisted_by_kronecker(const DirichletCharacter& chi, std::int64_t D) {
  if (!is_fundamental_discriminant(D)) {
    throw Error(ErrorKind::NotFundamental, std::to_string(D) + " is not a fundamental discriminant");
  }
  return [chi, D](std::int64_t a) { return chi.value(a) * Rational(kronecker(D, a)); };
}

std::int64_t ModPRealization::realize(const CycloElement& x) const {
  if (order % x.order() != 0) {
    throw Error(ErrorKind::InvalidArgument, "element of order " + std::to_string(x.order()) +
                                                " is outside Q(zeta_" + std::to_string(order) + ")");
  }
  CycloElement y = x.lift(order);
  const Integer P = p;
  std::int64_t acc = 0;
  std::int64_t pw = 1;
  for (const auto& c : y.coeffs()) {
    Integer num, den;
    mpz_fdiv_r(num.get_mpz_t(), c.get_num_mpz_t(), P.get_mpz_t());
    mpz_fdiv_r(den.get_mpz_t(), c.get_den_mpz_t(), P.get_mpz_t());
    if (den == 0) {
      throw Error(ErrorKind::InvalidArgument, "denominator divisible by " + std::to_string(p));
    }
    std::int64_t term = num.get_si() * mod_inverse(den.get_si(), p) % p;
    acc = (acc + term * pw) % p;
    pw = pw * image % p;
  }
  return acc;
}

std::vector<ModPRealization> modp_realizations(const DirichletCharacter& chi, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not an odd prime");
  std::vector<ModPRealization> out;
  const std::int64_t o = chi.order();
  if ((p - 1) % o != 0) return out;
  for (std::int64_t g = 1; g < p; ++g) {
    if (mult_order(g, p) == o) out.push_back(ModPRealization{p, o, g});
  }
  return out;
}

}  // namespace hecke
