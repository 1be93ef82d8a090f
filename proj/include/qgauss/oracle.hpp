#pragma once

// Independent brute-force evaluations of every sum the closed forms claim
// to compute, used as ground truth. Each oracle is written from the
// defining left-hand-side sum, never from a closed form. Feasibility
// guards use deterministic cost estimates, not timeouts.

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qgauss/arith.hpp"
#include "qgauss/characters.hpp"
#include "qgauss/cyclo.hpp"
#include "qgauss/gauss.hpp"

namespace qgauss {

// Parameter bag for a lemma-level sum; which fields are meaningful (and
// their admissible ranges) is documented per operation.
struct SumSpec {
  std::int64_t p = 0;   // odd prime
  int alpha = 0;        // prime-power exponent
  std::int64_t n = 0;   // tuple length or numerator parameter
  std::int64_t k = 0;   // Legendre-factor count / binomial index / power
  std::int64_t m = 0;   // moment order
  std::int64_t a = 0;   // residue target
};

inline constexpr double kBruteTupleBudget = 1e8;   // tuple-enumeration guard
inline constexpr std::int64_t kMaxExactPowerQ = 125;  // exact power-mean guards
inline constexpr std::int64_t kMaxExactPowerM = 4;
inline constexpr double kFloatOpsBudget = 2e8;     // float power-mean guard

inline bool pow_exceeds(std::int64_t base, std::int64_t exp, double limit) {
  double v = 1.0;
  for (std::int64_t i = 0; i < exp; ++i) {
    v *= static_cast<double>(base);
    if (v > limit) return true;
  }
  return false;
}

// T_p(n, k, a) by exhaustive enumeration: all tuples (x_1..x_n) of nonzero
// residues with x_1+...+x_n = a mod p, summing the Legendre product of the
// first k coordinates. The last coordinate is eliminated analytically.
inline bigint t_brute(std::int64_t p, std::int64_t n, std::int64_t k, std::int64_t a) {
  if (!is_odd_prime(p)) throw hypothesis_error("t_brute: p must be an odd prime");
  if (k < 1 || k > n) throw hypothesis_error("t_brute: need 1 <= k <= n");
  if (pow_exceeds(p - 1, n, kBruteTupleBudget))
    throw feasibility_error("t_brute: (p-1)^n too large for exhaustive enumeration");
  std::vector<int> ltab(static_cast<std::size_t>(p));
  for (std::int64_t x = 0; x < p; ++x) ltab[static_cast<std::size_t>(x)] = legendre(x, p);
  a = mod_i64(a, p);
  std::int64_t acc = 0;
  // depth-first over x_1..x_(n-1); x_n is determined by the congruence
  const std::function<void(std::int64_t, std::int64_t, int)> walk =
      [&](std::int64_t depth, std::int64_t sum, int prod) {
        if (depth == n - 1) {
          const std::int64_t last = mod_i64(a - sum, p);
          if (last == 0) return;
          acc += prod * (k == n ? ltab[static_cast<std::size_t>(last)] : 1);
          return;
        }
        for (std::int64_t x = 1; x < p; ++x)
          walk(depth + 1, sum + x >= p ? sum + x - p : sum + x,
               depth < k ? prod * ltab[static_cast<std::size_t>(x)] : prod);
      };
  walk(0, 0, 1);
  return acc;
}

// Number of tuples (x_1..x_n) of nonzero residues with x_1+...+x_n = a mod p.
inline bigint count_brute(std::int64_t p, std::int64_t n, std::int64_t a) {
  if (!is_odd_prime(p)) throw hypothesis_error("count_brute: p must be an odd prime");
  if (n < 1) throw hypothesis_error("count_brute: n must be >= 1");
  if (pow_exceeds(p - 1, n - 1, kBruteTupleBudget))
    throw feasibility_error("count_brute: (p-1)^(n-1) too large for exhaustive enumeration");
  a = mod_i64(a, p);
  std::int64_t acc = 0;
  const std::function<void(std::int64_t, std::int64_t)> walk = [&](std::int64_t depth, std::int64_t sum) {
    if (depth == n - 1) {
      acc += mod_i64(a - sum, p) != 0 ? 1 : 0;
      return;
    }
    for (std::int64_t x = 1; x < p; ++x)
      walk(depth + 1, sum + x >= p ? sum + x - p : sum + x);
  };
  walk(0, 0);
  return acc;
}

// Direct evaluation of sum over x = 1..p-1 of ((x^2 + a x) / p).
inline bigint quadsum_brute(std::int64_t p, std::int64_t a) {
  if (!is_odd_prime(p)) throw hypothesis_error("quadsum_brute: p must be an odd prime");
  std::int64_t acc = 0;
  for (std::int64_t x = 1; x < p; ++x) acc += legendre(x * x + mod_i64(a, p) * x, p);
  return acc;
}

// Sum over units b mod p^alpha of e(n b^2 (a^2 - 1) / p^alpha), by direct
// summation, exact at order p^alpha.
inline Cyclo inner_sum_brute(std::int64_t p, int alpha, std::int64_t n, std::int64_t a) {
  if (!is_odd_prime(p)) throw hypothesis_error("inner_sum_brute: p must be an odd prime");
  if (alpha < 2) throw hypothesis_error("inner_sum_brute: alpha must be >= 2");
  if (mod_i64(n, p) == 0) throw hypothesis_error("inner_sum_brute: n must be coprime to p");
  const std::int64_t pa = pow_i64(p, alpha);
  a = mod_i64(a, pa);
  if (std::gcd(a, pa) != 1) throw hypothesis_error("inner_sum_brute: a must be a unit mod p^alpha");
  const std::int64_t factor = mul_mod(mod_i64(a * a - 1, pa), mod_i64(n, pa), pa);
  Cyclo s(pa);
  for (std::int64_t b = 1; b <= pa; ++b) {
    if (b % p == 0) continue;
    s.add_term(mul_mod(mul_mod(b, b, pa), factor, pa), 1);
  }
  return s;
}

// A(m, k): sum over unit tuples (x_1..x_m) mod p^alpha with product = 1,
// where the first k coordinates satisfy p^(alpha-1) || x^2-1 and the rest
// p^alpha | x^2-1, of the product of the inner sums above. Composes
// inner_sum_brute so the decomposition is tested end to end; the result
// must reduce to a rational integer.
inline bigint a_brute(std::int64_t p, int alpha, std::int64_t m, std::int64_t k, std::int64_t n = 1) {
  if (!is_odd_prime(p)) throw hypothesis_error("a_brute: p must be an odd prime");
  if (alpha < 2) throw hypothesis_error("a_brute: alpha must be >= 2");
  if (m < 1) throw hypothesis_error("a_brute: m must be >= 1");
  if (k < 0 || k > m) throw hypothesis_error("a_brute: need 0 <= k <= m");
  if (mod_i64(n, p) == 0) throw hypothesis_error("a_brute: n must be coprime to p");
  const std::int64_t pa = pow_i64(p, alpha);
  const std::int64_t pam1 = pa / p;
  const std::int64_t phi = pam1 * (p - 1);
  if (pow_exceeds(phi, m, kBruteTupleBudget))
    throw feasibility_error("a_brute: phi(p^alpha)^m too large for exhaustive enumeration");

  std::vector<std::int64_t> exactly, fully;
  for (std::int64_t x = 1; x < pa; ++x) {
    if (x % p == 0) continue;
    const std::int64_t d = x * x - 1;
    if (d % pa == 0)
      fully.push_back(x);
    else if (d % pam1 == 0)
      exactly.push_back(x);
  }

  std::map<std::int64_t, Cyclo> inner;
  const auto inner_of = [&](std::int64_t x) -> const Cyclo& {
    auto it = inner.find(x);
    if (it == inner.end()) it = inner.emplace(x, inner_sum_brute(p, alpha, n, x)).first;
    return it->second;
  };

  Cyclo total(pa);
  std::vector<std::int64_t> tuple(static_cast<std::size_t>(m));
  const std::function<void(std::int64_t, std::int64_t)> walk = [&](std::int64_t depth, std::int64_t prod) {
    if (depth == m) {
      if (prod != 1) return;
      Cyclo term = Cyclo::integer(pa, 1);
      for (std::int64_t x : tuple) term = term * inner_of(x);
      total += term;
      return;
    }
    const std::vector<std::int64_t>& pool = depth < k ? exactly : fully;
    for (std::int64_t x : pool) {
      tuple[static_cast<std::size_t>(depth)] = x;
      walk(depth + 1, mul_mod(prod, x, pa));
    }
  };
  walk(0, 1);

  const std::optional<bigint> v = to_integer(total);
  if (!v) throw std::logic_error("a_brute: non-integral result (implementation bug)");
  return *v;
}

enum class Backend { exact, floating };

struct PowerMeanResult {
  Backend backend = Backend::exact;
  std::optional<bigint> integer;  // exact backend: value when it reduces to a rational integer
  std::optional<Cyclo> exact;     // exact backend: full group-ring value
  std::complex<double> approx{0.0, 0.0};
  double error_bound = 0.0;
};

inline bool power_mean_exact_feasible(const Modulus& m, std::int64_t moment) {
  return m.q <= kMaxExactPowerQ && moment <= kMaxExactPowerM && gauss_order(m) <= kMaxExactOrder;
}

inline bool power_mean_float_feasible(const Modulus& m, std::int64_t moment) {
  return static_cast<double>(m.phi) * static_cast<double>(m.q) +
             static_cast<double>(m.phi) * static_cast<double>(moment) <=
         kFloatOpsBudget;
}

namespace detail {

// Dense cyclic convolution accumulator for the exact power-mean sweep. All
// coefficient vectors here are nonnegative, so every partial sum is bounded
// by the final 1-norm phi(q)^(2m+1); the int64 instantiation is selected
// only when that bound fits.
template <class I>
std::vector<I> power_total_exact(const Modulus& mod, std::int64_t n, std::int64_t power,
                                 std::int64_t moment) {
  const std::int64_t q = mod.q;
  const std::int64_t L = gauss_order(mod);
  const std::int64_t Lq = L / q;
  const std::int64_t nr = mod_i64(n, q);

  std::vector<std::int64_t> units, unit_index;
  for (std::int64_t a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    units.push_back(a);
    unit_index.push_back(mul_mod(pow_mod(a, power, q), nr, q) * Lq);
  }

  const std::size_t Ls = static_cast<std::size_t>(L);
  std::vector<I> total(Ls), s(Ls), t(Ls), buf(2 * Ls);
  std::vector<std::int64_t> g(Ls);
  std::vector<std::int64_t> gnz;

  for (const Character& chi : enumerate_characters(mod)) {
    std::fill(g.begin(), g.end(), 0);
    gnz.clear();
    for (std::size_t i = 0; i < units.size(); ++i) {
      const RootOfUnity w = chi(units[i]);
      std::int64_t idx = unit_index[i] + w.num * (L / w.den);
      if (idx >= L) idx -= L;
      if (g[static_cast<std::size_t>(idx)]++ == 0) gnz.push_back(idx);
    }
    // s = g * conj(g): histogram of index differences
    std::fill(s.begin(), s.end(), I(0));
    for (std::int64_t i : gnz) {
      const std::int64_t gi = g[static_cast<std::size_t>(i)];
      for (std::int64_t j : gnz) {
        std::int64_t d = i - j;
        if (d < 0) d += L;
        s[static_cast<std::size_t>(d)] += I(gi * g[static_cast<std::size_t>(j)]);
      }
    }
    // t = s^moment
    t = s;
    for (std::int64_t step = 2; step <= moment; ++step) {
      std::fill(buf.begin(), buf.end(), I(0));
      for (std::size_t i = 0; i < Ls; ++i) {
        if (t[i] == 0) continue;
        const I ti = t[i];
        for (std::size_t j = 0; j < Ls; ++j) {
          if (s[j] == 0) continue;
          buf[i + j] += ti * s[j];
        }
      }
      for (std::size_t x = 0; x < Ls; ++x) {
        t[x] = std::move(buf[x]);
        t[x] += buf[x + Ls];
      }
    }
    for (std::size_t x = 0; x < Ls; ++x) total[x] += t[x];
  }
  return total;
}

struct ValErr {
  double v = 0.0;
  double e = 0.0;
};

inline ValErr ve_mul(const ValErr& a, const ValErr& b) {
  const double eps = std::numeric_limits<double>::epsilon();
  const double v = a.v * b.v;
  return {v, std::abs(a.v) * b.e + std::abs(b.v) * a.e + a.e * b.e + std::abs(v) * eps};
}

// Float character sum sum_a chi(a) e(n a^power / q), fixed order a = 1..q.
inline std::complex<double> character_sum_float(std::int64_t n, const Character& chi,
                                                std::int64_t power, double* error_bound) {
  const Modulus& m = chi.modulus();
  const std::int64_t q = m.q;
  const std::int64_t nr = mod_i64(n, q);
  const double tau = 6.283185307179586476925286766559;
  std::complex<double> acc(0.0, 0.0);
  for (std::int64_t a = 1; a <= q; ++a) {
    const RootOfUnity w = chi(a);
    if (w.zero) continue;
    const std::int64_t idx = mul_mod(pow_mod(a, power, q), nr, q);
    const double angle = tau * (static_cast<double>(idx) / static_cast<double>(q) +
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

inline PowerMeanResult power_mean_core(std::int64_t n, const Modulus& mod, std::int64_t power,
                                       std::int64_t moment, Backend backend) {
  if (moment < 1) throw hypothesis_error("power mean: moment m must be >= 1");
  if (power < 1) throw hypothesis_error("power mean: power must be >= 1");
  if (std::gcd(mod_i64(n, mod.q), mod.q) != 1)
    throw hypothesis_error("power mean: n must be coprime to q");

  PowerMeanResult res;
  res.backend = backend;
  if (backend == Backend::exact) {
    if (!power_mean_exact_feasible(mod, moment))
      throw feasibility_error("power mean: exact backend guarded to q <= " +
                              std::to_string(kMaxExactPowerQ) + ", m <= " +
                              std::to_string(kMaxExactPowerM) + " (and order <= " +
                              std::to_string(kMaxExactOrder) + "); requested q = " +
                              std::to_string(mod.q) + ", m = " + std::to_string(moment));
    const std::int64_t L = gauss_order(mod);
    // int64 is safe when the 1-norm bound phi^(2m+1) stays below 2^62
    const bool fits_i64 = bigint_pow(mod.phi, 2 * moment + 1) < (bigint(1) << 62);
    Cyclo total(L);
    if (fits_i64) {
      const std::vector<std::int64_t> v = power_total_exact<std::int64_t>(mod, n, power, moment);
      for (std::int64_t j = 0; j < L; ++j)
        if (v[static_cast<std::size_t>(j)] != 0) total.add_term(j, v[static_cast<std::size_t>(j)]);
    } else {
      const std::vector<bigint> v = power_total_exact<bigint>(mod, n, power, moment);
      for (std::int64_t j = 0; j < L; ++j)
        if (v[static_cast<std::size_t>(j)] != 0) total.add_term(j, v[static_cast<std::size_t>(j)]);
    }
    res.integer = to_integer(total);
    if (mod.square_full && power == 2 && !res.integer)
      throw std::logic_error("power mean: non-integral exact result at square-full q "
                             "(implementation bug)");
    const auto ev = total.eval_float();
    res.approx = ev.value;
    res.error_bound = ev.bound;
    res.exact = std::move(total);
    return res;
  }

  if (!power_mean_float_feasible(mod, moment))
    throw feasibility_error("power mean: float backend cost estimate exceeds budget at q = " +
                            std::to_string(mod.q));
  ValErr acc;
  const double eps = std::numeric_limits<double>::epsilon();
  for (const Character& chi : enumerate_characters(mod)) {
    double bg = 0.0;
    const std::complex<double> gval = character_sum_float(n, chi, power, &bg);
    const double s = std::norm(gval);
    ValErr vs{s, 2.0 * std::abs(gval) * bg + bg * bg + s * eps};
    ValErr t = vs;
    for (std::int64_t step = 2; step <= moment; ++step) t = ve_mul(t, vs);
    acc.v += t.v;
    acc.e += t.e + std::abs(acc.v) * eps;
  }
  res.approx = {acc.v, 0.0};
  res.error_bound = acc.e;
  return res;
}

}  // namespace detail

// Sum over all characters mod q of |G(n, chi; q)|^(2m). The exact backend
// asserts integrality (square-full q); the float backend reports value and
// rounding bound, summing in character-enumeration order.
inline PowerMeanResult power_mean_brute(std::int64_t n, const Modulus& mod, std::int64_t m,
                                        Backend backend) {
  return detail::power_mean_core(n, mod, 2, m, backend);
}

// Same contract with a^2 replaced by a^k_power in the character sum.
inline PowerMeanResult power_sum_k_brute(std::int64_t n, const Modulus& mod, std::int64_t k_power,
                                         std::int64_t m, Backend backend) {
  return detail::power_mean_core(n, mod, k_power, m, backend);
}

// SumSpec conveniences for the lemma-level oracles.
inline bigint t_brute(const SumSpec& s) { return t_brute(s.p, s.n, s.k, s.a); }
inline bigint count_brute(const SumSpec& s) { return count_brute(s.p, s.n, s.a); }
inline Cyclo inner_sum_brute(const SumSpec& s) { return inner_sum_brute(s.p, s.alpha, s.n, s.a); }
inline bigint a_brute(const SumSpec& s) { return a_brute(s.p, s.alpha, s.m, s.k, s.n == 0 ? 1 : s.n); }

}  // namespace qgauss
