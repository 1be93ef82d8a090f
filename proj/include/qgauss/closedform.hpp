#pragma once

// Every closed-form right-hand side used by the verification suite, as an
// exact evaluator. Domain guards are strict: each evaluator refuses inputs
// outside its stated hypotheses instead of extrapolating.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qgauss/arith.hpp"
#include "qgauss/cyclo.hpp"
#include "qgauss/gauss.hpp"

namespace qgauss {

// Classification of a unit a mod p^alpha by how p^(alpha-1) sits in a^2 - 1.
// In the exactly-divides case a = r p^(alpha-1) + epsilon with 1 <= r <= p-1
// and epsilon = +-1.
enum class InnerCase { not_divisible, exactly_divides, fully_divides };

struct InnerSumCase {
  InnerCase tag = InnerCase::not_divisible;
  std::int64_t r = 0;
  int epsilon = 0;
};

inline InnerSumCase classify_inner(std::int64_t p, int alpha, std::int64_t a) {
  if (!is_odd_prime(p)) throw std::invalid_argument("classify_inner: p must be an odd prime");
  if (alpha < 2) throw std::invalid_argument("classify_inner: alpha must be >= 2");
  const std::int64_t pa = pow_i64(p, alpha);
  a = mod_i64(a, pa);
  if (std::gcd(a, p) != 1) throw std::invalid_argument("classify_inner: a must be a unit mod p^alpha");

  const std::int64_t a2m1 = a * a - 1;  // a < p^alpha <= ~1e5, so this fits easily
  if (a2m1 % pa == 0) return InnerSumCase{InnerCase::fully_divides, 0, 0};
  int v = 0;
  std::int64_t rest = a2m1;
  while (rest % p == 0) {
    rest /= p;
    ++v;
  }
  if (v != alpha - 1) return InnerSumCase{InnerCase::not_divisible, 0, 0};

  const std::int64_t pam1 = pa / p;
  for (int eps : {+1, -1}) {
    const std::int64_t diff = a - eps;
    if (diff % pam1 == 0) {
      const std::int64_t r = diff / pam1;
      if (r >= 1 && r <= p - 1) return InnerSumCase{InnerCase::exactly_divides, r, eps};
    }
  }
  throw std::logic_error("classify_inner: no decomposition a = r p^(alpha-1) + eps found");
}

// Sum over units b mod p^alpha of e(n b^2 (a^2-1) / p^alpha), in closed
// form, as a CycloSum at order p^alpha:
//   0                                          when p^(alpha-1) does not divide a^2-1,
//   p^(alpha-1) [ (2 eps r n / p) G(1;p) - 1 ] when p^(alpha-1) exactly divides a^2-1,
//   phi(p^alpha)                               when p^alpha divides a^2-1.
inline Cyclo inner_sum_closed(std::int64_t p, int alpha, std::int64_t n, std::int64_t a) {
  if (alpha < 2) throw hypothesis_error("inner_sum_closed: alpha must be >= 2");
  if (!is_odd_prime(p)) throw hypothesis_error("inner_sum_closed: p must be an odd prime");
  if (mod_i64(n, p) == 0) throw hypothesis_error("inner_sum_closed: n must be coprime to p");
  const std::int64_t pa = pow_i64(p, alpha);
  const InnerSumCase c = classify_inner(p, alpha, a);
  switch (c.tag) {
    case InnerCase::not_divisible:
      return Cyclo(pa);
    case InnerCase::fully_divides:
      return Cyclo::integer(pa, pa / p * (p - 1));
    case InnerCase::exactly_divides: {
      const int sym = legendre(mod_i64(2 * c.epsilon * c.r, p) * mod_i64(n, p), p);
      Cyclo g = classical_gauss_sum(1, factorize(p)).embedded(pa);
      Cyclo bracket = g.scaled(sym) - Cyclo::integer(pa, 1);
      return bracket.scaled(pa / p);
    }
  }
  throw std::logic_error("inner_sum_closed: unreachable");
}

// T_p(n, k, a): the sum over nonzero-residue tuples (x_1..x_n) with
// x_1+...+x_n = a mod p of the Legendre product (x_1 ... x_k / p).
// Closed form, split on the parity of k and on p | a.
inline bigint t_closed(std::int64_t p, std::int64_t n, std::int64_t k, std::int64_t a) {
  if (!is_odd_prime(p)) throw hypothesis_error("t_closed: p must be an odd prime");
  if (k < 1 || k > n) throw hypothesis_error("t_closed: need 1 <= k <= n");
  const int chi_m1 = legendre(-1, p);
  const bool p_div_a = mod_i64(a, p) == 0;
  if (k % 2 == 1) {
    if (p_div_a) return 0;
    bigint v = bigint_pow(p, (k - 1) / 2);
    v *= legendre(a, p) * sign_pow(-1, n - k) * sign_pow(chi_m1, (k - 1) / 2);
    return v;
  }
  bigint v = bigint_pow(p, (k - 2) / 2);
  if (p_div_a)
    v *= (p - 1) * sign_pow(-1, n - k) * sign_pow(chi_m1, k / 2);
  else
    v *= sign_pow(-1, n + 1 - k) * sign_pow(chi_m1, k / 2);
  return v;
}

// Sum over x = 1..p-1 of ((x^2 + a x) / p): -1 when p does not divide a,
// p - 1 when it does.
inline bigint quadsum_closed(std::int64_t p, std::int64_t a) {
  if (!is_odd_prime(p)) throw hypothesis_error("quadsum_closed: p must be an odd prime");
  return mod_i64(a, p) == 0 ? bigint(p - 1) : bigint(-1);
}

// Number of nonzero-residue tuples (x_1..x_n) with x_1+...+x_n = a mod p.
inline bigint count_closed(std::int64_t p, std::int64_t n, std::int64_t a) {
  if (!is_odd_prime(p)) throw hypothesis_error("count_closed: p must be an odd prime");
  if (n < 1) throw hypothesis_error("count_closed: n must be >= 1");
  const bigint pm1 = bigint_pow(p - 1, n);
  const int sgn = sign_pow(-1, n);
  bigint num = mod_i64(a, p) == 0 ? pm1 + sgn * bigint(p - 1) : pm1 - sgn;
  if (num % p != 0) throw std::logic_error("count_closed: non-divisible numerator");
  return num / p;
}

// A(m, k) = 2^(m-2) p^(m(alpha-1)-1) ((-1)^k (p+1)(p-1)^m + (p-1)^(m-k+1) (p+1)^k).
// Exact for m >= 1 (the half-integer prefactor cancels; asserted).
inline bigint a_closed(std::int64_t p, int alpha, std::int64_t m, std::int64_t k) {
  if (!is_odd_prime(p)) throw hypothesis_error("a_closed: p must be an odd prime");
  if (alpha < 2) throw hypothesis_error("a_closed: alpha must be >= 2");
  if (m < 1) throw hypothesis_error("a_closed: m must be >= 1");
  if (k < 0 || k > m) throw hypothesis_error("a_closed: need 0 <= k <= m");
  const bigint inner = sign_pow(-1, k) * bigint(p + 1) * bigint_pow(p - 1, m) +
                       bigint_pow(p - 1, m - k + 1) * bigint_pow(p + 1, k);
  bigint num = bigint_pow(p, static_cast<std::int64_t>(m) * (alpha - 1) - 1) * inner;
  // times 2^(m-2); m = 1 divides by 2 and stays integral
  if (m >= 2) {
    num *= bigint_pow(2, m - 2);
  } else {
    if (num % 2 != 0) throw std::logic_error("a_closed: odd numerator at m = 1");
    num /= 2;
  }
  return num;
}

// Power mean over all characters mod p^alpha of |G(n, chi; p^alpha)|^(2m):
// 4^(m-1) phi(p^alpha)^2 p^((m-1) alpha), for alpha >= 2, m >= 2.
inline bigint lemma9_closed(std::int64_t p, int alpha, std::int64_t m) {
  if (!is_odd_prime(p)) throw hypothesis_error("lemma9_closed: p must be an odd prime");
  if (alpha < 2) throw hypothesis_error("lemma9_closed: alpha must be >= 2");
  if (m < 2) throw hypothesis_error("lemma9_closed: m must be >= 2");
  const std::int64_t phi = pow_i64(p, alpha - 1) * (p - 1);
  return bigint_pow(4, m - 1) * bigint(phi) * bigint(phi) *
         bigint_pow(p, (m - 1) * static_cast<std::int64_t>(alpha));
}

// Power mean over all characters mod q of |G(n, chi; q)|^(2m) for odd
// square-full q > 1 and m >= 2: 4^((m-1) omega(q)) q^(m-1) phi(q)^2.
// Independent of n (for gcd(n, q) = 1) by construction.
inline bigint theorem1_closed(const Modulus& m, std::int64_t mm) {
  if (!m.square_full || m.q <= 1)
    throw hypothesis_error("theorem1_closed: q not square-full (every prime exponent must be >= 2)");
  if (mm < 2) throw hypothesis_error("theorem1_closed: m must be >= 2");
  return bigint_pow(4, (mm - 1) * m.omega()) * bigint_pow(m.q, mm - 1) * bigint(m.phi) * bigint(m.phi);
}

// Fourth power mean at odd prime modulus: (p-1)(3p^2 - 6p - 1) plus, when
// p = 1 mod 4, the surd term 4 (n/p) (p-1) sqrt(p).
struct QuadSurd {
  bigint rational;    // c0
  bigint surd_coeff;  // c1, value is c0 + c1 sqrt(radicand)
  std::int64_t radicand = 0;

  double to_double() const {
    return rational.convert_to<double>() +
           surd_coeff.convert_to<double>() * std::sqrt(static_cast<double>(radicand));
  }
};

inline QuadSurd zhang_p4_closed(std::int64_t p, std::int64_t n) {
  if (!is_odd_prime(p)) throw hypothesis_error("zhang_p4_closed: p must be an odd prime");
  if (mod_i64(n, p) == 0) throw hypothesis_error("zhang_p4_closed: n must be coprime to p");
  QuadSurd v;
  v.radicand = p;
  v.rational = bigint(p - 1) * (3 * bigint(p) * p - 6 * p - 1);
  if (p % 4 == 1) v.surd_coeff = bigint(4 * legendre(n, p)) * (p - 1);
  return v;
}

// Sixth power mean at odd prime modulus p = 3 mod 4: (p-1)(10p^3 - 25p^2 - 4p - 1).
inline bigint zhang_p6_closed(std::int64_t p) {
  if (!is_odd_prime(p)) throw hypothesis_error("zhang_p6_closed: p must be an odd prime");
  if (p % 4 == 1)
    throw hypothesis_error("zhang_p6_closed: no closed form for p = 1 mod 4 "
                           "(exact value of the sixth power mean is an open question); "
                           "use the brute-force oracle instead");
  return bigint(p - 1) * (10 * bigint(p) * p * p - 25 * bigint(p) * p - 4 * p - 1);
}

// Fourth power mean of the k-th power sums at square-full q:
//   q phi(q)^2 prod_{p|q} (k, p-1)^2 prod_{p|q, (k,p-1)=1} phi(p-1)/(p-1).
// Exact rational value of the displayed product.
inline bigrat zhangliu_closed(const Modulus& m, std::int64_t k) {
  if (!m.square_full || m.q < 3)
    throw hypothesis_error("zhangliu_closed: q must be an odd square-full number >= 3");
  if (k < 1) throw hypothesis_error("zhangliu_closed: k must be >= 1");
  bigrat v = bigrat(m.q) * m.phi * m.phi;
  for (const PrimePower& f : m.factors) {
    const std::int64_t g = std::gcd(k, f.p - 1);
    v *= bigint(g) * g;
    if (g == 1) v *= bigrat(euler_phi(f.p - 1), f.p - 1);
  }
  return v;
}

}  // namespace qgauss
