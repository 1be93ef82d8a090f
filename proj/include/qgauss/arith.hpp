#pragma once

// Integer and modular arithmetic primitives for odd, desk-scale moduli:
// factorization, totients, Legendre/Jacobi symbols, primitive roots and
// discrete logarithms. Everything is a pure function; moduli stay below
// ~10^5, so scalar arithmetic fits in 64 bits (products via __int128).

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgauss {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Input violates the hypotheses of a closed form / identity.
class hypothesis_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A brute-force sweep whose deterministic cost estimate exceeds the budget.
class feasibility_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  std::int64_t p = 0;
  int alpha = 0;

  std::int64_t value() const {
    std::int64_t v = 1;
    for (int i = 0; i < alpha; ++i) v *= p;
    return v;
  }
};

// Odd modulus q >= 3 together with its prime-power factorization.
// Invariants: factors ascending in p, all p odd primes, q = prod p^alpha,
// phi = prod p^(alpha-1)(p-1), square_full iff every alpha >= 2.
struct Modulus {
  std::int64_t q = 0;
  std::vector<PrimePower> factors;
  std::int64_t phi = 0;
  bool square_full = false;

  int omega() const { return static_cast<int>(factors.size()); }
};

inline std::int64_t pow_i64(std::int64_t base, int exp) {
  __int128 r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > std::numeric_limits<std::int64_t>::max() || r < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("pow_i64: " + std::to_string(base) + "^" + std::to_string(exp) +
                                " exceeds 64 bits");
  }
  return static_cast<std::int64_t>(r);
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t mod_i64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
  if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
  std::int64_t b = mod_i64(base, m);
  std::int64_t r = 1 % m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1;
  }
  return r;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = mod_i64(a, m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw std::invalid_argument("inv_mod: argument is not a unit");
  return mod_i64(t0, m);
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n > 1'000'000'000'000)
    throw feasibility_error("is_prime: " + std::to_string(n) + " is beyond desk scale");
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline bool is_odd_prime(std::int64_t n) { return n >= 3 && n % 2 == 1 && is_prime(n); }

// Distinct prime divisors, ascending.
inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Euler totient for arbitrary n >= 1 (used e.g. for phi(p-1), which is even).
inline std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  std::int64_t result = n;
  for (std::int64_t d : prime_divisors(n)) result = result / d * (d - 1);
  return result;
}

// Factorize an odd modulus q >= 3 by trial division (desk-scale moduli).
inline Modulus factorize(std::int64_t q) {
  if (q < 3) throw hypothesis_error("factorize: modulus must be >= 3, got " + std::to_string(q));
  if (q % 2 == 0) throw hypothesis_error("factorize: even modulus " + std::to_string(q) + " is unsupported");
  if (q > 10'000'000'000)
    throw feasibility_error("factorize: modulus " + std::to_string(q) + " is beyond desk scale");
  Modulus m;
  m.q = q;
  m.phi = 1;
  m.square_full = true;
  std::int64_t rest = q;
  for (std::int64_t d = 3; d * d <= rest; d += 2) {
    if (rest % d != 0) continue;
    PrimePower pp{d, 0};
    std::int64_t contrib = 1;
    while (rest % d == 0) {
      rest /= d;
      ++pp.alpha;
      contrib *= d;
    }
    m.phi *= contrib / d * (d - 1);
    m.square_full = m.square_full && pp.alpha >= 2;
    m.factors.push_back(pp);
  }
  if (rest > 1) {
    m.factors.push_back(PrimePower{rest, 1});
    m.phi *= rest - 1;
    m.square_full = false;
  }
  return m;
}

// Jacobi symbol (a/n) for odd n >= 1; multiplicative extension of the
// Legendre symbol over the factorization of n.
inline int jacobi(std::int64_t a, std::int64_t n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("jacobi: lower argument must be odd and positive");
  a = mod_i64(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// Legendre symbol (a/p): 0 if p | a, +1 on nonzero quadratic residues, -1
// otherwise. The strict form rejects a non-prime lower argument.
inline int legendre(std::int64_t a, std::int64_t p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("legendre: lower argument must be an odd prime, got " + std::to_string(p));
  return jacobi(a, p);
}

inline int sign_pow(int sign, std::int64_t exp) {
  return (sign == -1 && (exp & 1)) ? -1 : 1;
}

// Smallest generator of the (cyclic) unit group mod p^alpha. For alpha >= 2
// lift the smallest primitive root g mod p: keep g when g^(phi(p^alpha)/p)
// is not 1 mod p^alpha, otherwise use g + p.
inline std::int64_t primitive_root(std::int64_t p, int alpha) {
  if (!is_odd_prime(p)) throw std::invalid_argument("primitive_root: p must be an odd prime");
  if (alpha < 1) throw std::invalid_argument("primitive_root: alpha must be >= 1");
  const std::vector<std::int64_t> ell = prime_divisors(p - 1);
  std::int64_t g = 0;
  for (std::int64_t cand = 2; cand < p; ++cand) {
    bool ok = true;
    for (std::int64_t l : ell) {
      if (pow_mod(cand, (p - 1) / l, p) == 1) { ok = false; break; }
    }
    if (ok) { g = cand; break; }
  }
  if (g == 0) throw std::logic_error("primitive_root: no generator found");
  if (alpha == 1) return g;
  const std::int64_t pa = pow_i64(p, alpha);
  const std::int64_t phi = pa / p * (p - 1);
  if (pow_mod(g, phi / p, pa) != 1) return g;
  return g + p;
}

// Exponent e in [0, phi(p^alpha)) with g^e = x mod p^alpha, by
// baby-step/giant-step. Requires x to be a unit and g a generator.
inline std::int64_t discrete_log(std::int64_t x, std::int64_t g, std::int64_t p, int alpha) {
  if (!is_odd_prime(p)) throw std::invalid_argument("discrete_log: p must be an odd prime");
  if (alpha < 1) throw std::invalid_argument("discrete_log: alpha must be >= 1");
  const std::int64_t pa = pow_i64(p, alpha);
  x = mod_i64(x, pa);
  if (x % p == 0) throw std::invalid_argument("discrete_log: argument is not a unit");
  const std::int64_t n = pa / p * (p - 1);
  std::int64_t m = 1;
  while (m * m < n) ++m;
  std::unordered_map<std::int64_t, std::int64_t> baby;
  baby.reserve(static_cast<std::size_t>(m));
  std::int64_t cur = 1;
  for (std::int64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = mul_mod(cur, g, pa);
  }
  const std::int64_t giant = inv_mod(pow_mod(g, m, pa), pa);
  std::int64_t gamma = x;
  for (std::int64_t i = 0; i * m < n + m; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) {
      std::int64_t e = i * m + it->second;
      if (e < n) return e;
    }
    gamma = mul_mod(gamma, giant, pa);
  }
  throw std::invalid_argument("discrete_log: no exponent found (g is not a generator?)");
}

inline bigint bigint_pow(bigint base, std::int64_t exp) {
  bigint r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

inline bigint binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  bigint r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace qgauss
