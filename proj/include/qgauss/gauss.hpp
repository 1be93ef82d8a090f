#pragma once

// Classical and generalized quadratic Gauss sums, their splitting across
// coprime moduli, and the upper-bound checks. Exact values live at the
// working order L = lcm(q, phi(q)): e(n a^2 / q) has order dividing q and
// chi(a) order dividing phi(q).

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qgauss/arith.hpp"
#include "qgauss/characters.hpp"
#include "qgauss/cyclo.hpp"

namespace qgauss {

inline std::int64_t gauss_order(const Modulus& m) { return std::lcm(m.q, m.phi); }

// Largest working order the exact backend will allocate.
inline constexpr std::int64_t kMaxExactOrder = 65536;

inline void check_exact_order(std::int64_t L) {
  if (L > kMaxExactOrder)
    throw feasibility_error("exact backend: working order " + std::to_string(L) +
                            " exceeds the limit " + std::to_string(kMaxExactOrder));
}

// G(n; q) = sum over a = 1..q of e(n a^2 / q), at order q.
inline Cyclo classical_gauss_sum(std::int64_t n, const Modulus& m) {
  check_exact_order(m.q);
  const std::int64_t q = m.q;
  Cyclo g(q);
  const std::int64_t nr = mod_i64(n, q);
  for (std::int64_t a = 1; a <= q; ++a) g.add_term(mul_mod(mul_mod(a, a, q), nr, q), 1);
  return g;
}

// G(n, chi; q) = sum over a of chi(a) e(n a^2 / q), exact at lcm(q, phi(q)).
// Requires gcd(n, q) = 1; the sums depend on n only mod q.
inline Cyclo gauss_sum_exact(std::int64_t n, const Character& chi) {
  const Modulus& m = chi.modulus();
  const std::int64_t q = m.q;
  const std::int64_t nr = mod_i64(n, q);
  if (std::gcd(nr, q) != 1)
    throw hypothesis_error("gauss_sum: n must be coprime to q");
  const std::int64_t L = gauss_order(m);
  check_exact_order(L);
  Cyclo g(L);
  for (std::int64_t a = 1; a <= q; ++a) {
    const RootOfUnity w = chi(a);
    if (w.zero) continue;
    const std::int64_t quad = mul_mod(mul_mod(a, a, q), nr, q);
    g.add_term(quad * (L / q) + w.num * (L / w.den), 1);
  }
  return g;
}

// Same sum evaluated directly in double-precision complex arithmetic, with
// a conservative a-priori rounding bound. Fixed summation order a = 1..q.
inline std::complex<double> gauss_sum_float(std::int64_t n, const Character& chi,
                                            double* error_bound = nullptr) {
  const Modulus& m = chi.modulus();
  const std::int64_t q = m.q;
  const std::int64_t nr = mod_i64(n, q);
  if (std::gcd(nr, q) != 1)
    throw hypothesis_error("gauss_sum: n must be coprime to q");
  const double tau = 6.283185307179586476925286766559;
  std::complex<double> acc(0.0, 0.0);
  for (std::int64_t a = 1; a <= q; ++a) {
    const RootOfUnity w = chi(a);
    if (w.zero) continue;
    const std::int64_t quad = mul_mod(mul_mod(a, a, q), nr, q);
    const double angle = tau * (static_cast<double>(quad) / static_cast<double>(q) +
                                static_cast<double>(w.num) / static_cast<double>(w.den));
    acc += std::complex<double>(std::cos(angle), std::sin(angle));
  }
  if (error_bound != nullptr) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double terms = static_cast<double>(m.phi);
    *error_bound = (terms + 16.0) * terms * eps;
  }
  return acc;
}

struct GaussSumValue {
  std::int64_t n = 0;
  Character chi;
  Cyclo exact;
  std::complex<double> approx;
  double error_bound = 0.0;
};

inline GaussSumValue gauss_sum(std::int64_t n, const Character& chi) {
  Cyclo exact = gauss_sum_exact(n, chi);
  const auto ev = exact.eval_float();
  return GaussSumValue{mod_i64(n, chi.modulus().q), chi, std::move(exact), ev.value, ev.bound};
}

// |x|^2 = x * conj(x), exactly.
inline Cyclo norm_squared(const Cyclo& x) { return x * x.conjugate(); }

struct MultiplicativitySides {
  Cyclo lhs;
  Cyclo rhs;
  bool equal = false;
};

// Splitting across coprime moduli: with chi = chi1 chi2 (chi1 mod q1, chi2
// mod q2, gcd(q1,q2)=1) and gcd(u, q1 q2) = 1, checks
//   G(u, chi; q1 q2) = chi1(q2) chi2(q1) G(u q2, chi1; q1) G(u q1, chi2; q2)
// as an exact identity at the combined working order.
inline MultiplicativitySides multiplicativity_sides(std::int64_t u, const Modulus& m1,
                                                    const Modulus& m2, const Character& chi1,
                                                    const Character& chi2) {
  if (chi1.modulus().q != m1.q || chi2.modulus().q != m2.q)
    throw std::invalid_argument("multiplicativity_check: characters do not match the moduli");
  if (std::gcd(m1.q, m2.q) != 1)
    throw std::invalid_argument("multiplicativity_check: moduli must be coprime");
  if (std::gcd(mod_i64(u, m1.q * m2.q), m1.q * m2.q) != 1)
    throw std::invalid_argument("multiplicativity_check: u must be a unit mod q1*q2");

  const Modulus combined = factorize(m1.q * m2.q);
  // Merge index vectors along the ascending prime order of the combined
  // factorization; both sides use the same deterministic primitive roots.
  std::vector<std::int64_t> indices;
  indices.reserve(combined.factors.size());
  std::size_t i1 = 0, i2 = 0;
  for (const PrimePower& f : combined.factors) {
    if (i1 < m1.factors.size() && m1.factors[i1].p == f.p)
      indices.push_back(chi1.indices()[i1++]);
    else if (i2 < m2.factors.size() && m2.factors[i2].p == f.p)
      indices.push_back(chi2.indices()[i2++]);
    else
      throw std::logic_error("multiplicativity_check: factor mismatch");
  }
  const Character chi = make_character(combined, std::move(indices));

  const std::int64_t L = gauss_order(combined);
  Cyclo lhs = gauss_sum_exact(u, chi);

  const RootOfUnity w1 = chi1(m2.q);
  const RootOfUnity w2 = chi2(m1.q);
  Cyclo rhs = Cyclo::from_root(w1.num, w1.den, L);
  rhs = rhs * Cyclo::from_root(w2.num, w2.den, L);
  rhs = rhs * gauss_sum_exact(u * m2.q, chi1).embedded(L);
  rhs = rhs * gauss_sum_exact(u * m1.q, chi2).embedded(L);
  const bool equal = equals_exact(lhs, rhs);
  return MultiplicativitySides{std::move(lhs), std::move(rhs), equal};
}

inline bool multiplicativity_check(std::int64_t u, const Modulus& m1, const Modulus& m2,
                                   const Character& chi1, const Character& chi2) {
  return multiplicativity_sides(u, m1, m2, chi1, chi2).equal;
}

struct BoundCheckReport {
  std::int64_t q = 0;
  std::int64_t n = 0;
  double bound = 0.0;        // 2^omega(q) * sqrt(q)
  double max_abs = 0.0;      // max over characters of |G(n, chi; q)|
  std::int64_t argmax_rank = 0;
  double tolerance = 0.0;
  bool holds = false;
};

// Checks max over all chi of |G(n, chi; q)| against 2^omega(q) sqrt(q).
inline BoundCheckReport bound_check(std::int64_t n, const Modulus& m, double tolerance = 1e-6) {
  BoundCheckReport rep;
  rep.q = m.q;
  rep.n = mod_i64(n, m.q);
  rep.bound = std::ldexp(std::sqrt(static_cast<double>(m.q)), m.omega());
  rep.tolerance = tolerance;
  for (const Character& chi : enumerate_characters(m)) {
    const double v = std::abs(gauss_sum_float(n, chi));
    if (v > rep.max_abs) {
      rep.max_abs = v;
      rep.argmax_rank = chi.rank();
    }
  }
  rep.holds = rep.max_abs <= rep.bound + tolerance;
  return rep;
}

}  // namespace qgauss
