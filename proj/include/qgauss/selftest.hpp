#pragma once

// Invariant suites for every module, runnable as one deterministic
// self-test: fixed grids, fixed RNG seeds, fixed emission order. Suites
// may run on a worker pool; output is identical for any worker count.

#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qgauss/arith.hpp"
#include "qgauss/characters.hpp"
#include "qgauss/closedform.hpp"
#include "qgauss/cyclo.hpp"
#include "qgauss/gauss.hpp"
#include "qgauss/oracle.hpp"
#include "qgauss/verify.hpp"

namespace qgauss {

struct SuiteResult {
  std::string name;
  std::int64_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

namespace detail {

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) result_.failures.push_back(what);
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

inline SuiteResult suite_arith() {
  Checker c("arith");
  // factorization invariants against a direct unit count, odd q <= 2000
  for (std::int64_t q = 3; q <= 2000; q += 2) {
    const Modulus m = factorize(q);
    std::int64_t prod = 1;
    bool primes_ok = true;
    std::int64_t prev_p = 1;
    int min_alpha = 1 << 20;
    for (const PrimePower& f : m.factors) {
      prod *= f.value();
      primes_ok = primes_ok && is_odd_prime(f.p) && f.p > prev_p && f.alpha >= 1;
      prev_p = f.p;
      min_alpha = std::min(min_alpha, f.alpha);
    }
    std::int64_t units = 0;
    for (std::int64_t x = 1; x <= q; ++x) units += std::gcd(x, q) == 1 ? 1 : 0;
    c.check(prod == q && primes_ok, "factorize: factorization of q=" + std::to_string(q));
    c.check(m.phi == units, "factorize: phi mismatch at q=" + std::to_string(q));
    c.check(m.square_full == (min_alpha >= 2), "factorize: square_full flag at q=" + std::to_string(q));
    c.check(m.omega() == static_cast<int>(m.factors.size()), "factorize: omega at q=" + std::to_string(q));
  }
  // Euler criterion cross-check for p <= 97
  for (std::int64_t p = 3; p <= 97; p += 2) {
    if (!is_odd_prime(p)) continue;
    for (std::int64_t a = 1; a < p; ++a) {
      const std::int64_t e = pow_mod(a, (p - 1) / 2, p);
      const int sym = legendre(a, p);
      c.check((sym == 1 && e == 1) || (sym == -1 && e == p - 1),
              "legendre vs Euler criterion at a=" + std::to_string(a) + " p=" + std::to_string(p));
    }
  }
  // jacobi extends legendre multiplicatively over odd composite lower args
  for (std::int64_t q = 3; q <= 99; q += 2) {
    const Modulus m = factorize(q);
    for (std::int64_t a = 0; a <= q; ++a) {
      int prod = 1;
      for (const PrimePower& f : m.factors)
        for (int i = 0; i < f.alpha; ++i) prod *= legendre(a, f.p);
      c.check(jacobi(a, q) == prod, "jacobi vs legendre product at a=" + std::to_string(a) +
                                        " q=" + std::to_string(q));
    }
  }
  // discrete-log round trip over whole unit groups
  for (const auto& [p, alpha] : std::vector<std::pair<std::int64_t, int>>{
           {3, 2}, {3, 3}, {5, 2}, {7, 2}, {11, 2}, {7, 3}}) {
    const std::int64_t pa = pow_i64(p, alpha);
    const std::int64_t g = primitive_root(p, alpha);
    const std::int64_t phi = pa / p * (p - 1);
    // generator really has order phi(p^alpha)
    bool order_ok = pow_mod(g, phi, pa) == 1;
    for (std::int64_t ell : prime_divisors(phi))
      order_ok = order_ok && pow_mod(g, phi / ell, pa) != 1;
    c.check(order_ok, "primitive_root order at p^alpha=" + std::to_string(pa));
    for (std::int64_t x = 1; x < pa; ++x) {
      if (x % p == 0) continue;
      const std::int64_t e = discrete_log(x, g, p, alpha);
      c.check(e >= 0 && e < phi && pow_mod(g, e, pa) == x,
              "discrete_log round trip at x=" + std::to_string(x) + " mod " + std::to_string(pa));
    }
  }
  return c.take();
}

inline SuiteResult suite_characters() {
  Checker c("characters");
  for (std::int64_t q : {9, 25, 27, 49, 675}) {
    const Modulus m = factorize(q);
    const auto chars = enumerate_characters(m);
    c.check(static_cast<std::int64_t>(chars.size()) == m.phi,
            "enumerate: count mismatch at q=" + std::to_string(q));
    bool ranks_ok = true;
    for (std::size_t i = 0; i < chars.size(); ++i)
      ranks_ok = ranks_ok && chars[i].rank() == static_cast<std::int64_t>(i);
    c.check(ranks_ok && chars.front().is_principal(),
            "enumerate: deterministic order at q=" + std::to_string(q));
  }
  // orthogonality via exact cyclotomic sums
  for (std::int64_t q : {9, 25, 27, 49}) {
    const Modulus m = factorize(q);
    const auto chars = enumerate_characters(m);
    const std::int64_t D = chars.front().table()->exponent;
    for (std::int64_t a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      Cyclo sum(D);
      for (const Character& chi : chars) {
        const RootOfUnity w = chi(a);
        sum += Cyclo::from_root(w.num, w.den, D);
      }
      const bigint expect = a == 1 ? bigint(m.phi) : bigint(0);
      c.check(equals_exact(sum, Cyclo::integer(D, expect)),
              "orthogonality at q=" + std::to_string(q) + " a=" + std::to_string(a));
    }
  }
  for (std::int64_t q = 3; q <= 49; q += 2) {
    const Modulus m = factorize(q);
    const auto chars = enumerate_characters(m);
    std::vector<std::int64_t> units;
    for (std::int64_t a = 1; a < q; ++a)
      if (std::gcd(a, q) == 1) units.push_back(a);
    for (const Character& chi : chars) {
      const Character conj = chi.conjugate();
      for (std::int64_t a : units)
        c.check(conj(a) == chi(a).conj(),
                "conjugation at q=" + std::to_string(q) + " a=" + std::to_string(a));
      for (std::int64_t a : units)
        for (std::int64_t b : units)
          c.check(chi(a) * chi(b) == chi(a * b % q),
                  "multiplicativity at q=" + std::to_string(q) + " chi=" + std::to_string(chi.rank()));
    }
    for (std::int64_t a = 1; a < q; ++a)
      c.check(chars.front()(a).zero == (std::gcd(a, q) != 1),
              "zero marker at q=" + std::to_string(q) + " a=" + std::to_string(a));
  }
  return c.take();
}

inline SuiteResult suite_cyclo() {
  Checker c("cyclo");
  std::mt19937 rng(12345);
  const auto random_order = [&] { return 1 + static_cast<std::int64_t>(rng() % 360); };
  const auto random_elem = [&](std::int64_t L) {
    Cyclo x(L);
    const int terms = 1 + static_cast<int>(rng() % 8);
    for (int t = 0; t < terms; ++t)
      x.add_term(static_cast<std::int64_t>(rng() % L), bigint(static_cast<int>(rng() % 19) - 9));
    return x;
  };

  // equals_exact vs float agreement on random pairs (plus pairs equal by
  // construction: add a multiple of Phi_L to re-represent the same value)
  for (int it = 0; it < 100; ++it) {
    const std::int64_t L = random_order();
    const Cyclo x = random_elem(L);
    const Cyclo y = random_elem(L);
    const auto ex = x.eval_float();
    const auto ey = y.eval_float();
    const bool float_eq = std::abs(ex.value - ey.value) <= ex.bound + ey.bound + 1e-9;
    c.check(equals_exact(x, y) == float_eq,
            "equals_exact vs eval_float at L=" + std::to_string(L) + " it=" + std::to_string(it));

    const auto phi = detail::cyclotomic_poly(L);
    if (phi->degree < L) {
      Cyclo z = x;
      const std::int64_t shift = static_cast<std::int64_t>(rng() % (L - phi->degree));
      const int scale = 1 + static_cast<int>(rng() % 3);
      for (const auto& [e, coef] : phi->terms) z.add_term(e + shift, bigint(coef) * scale);
      const auto ez = z.eval_float();
      c.check(equals_exact(x, z), "re-representation equality at L=" + std::to_string(L));
      c.check(std::abs(ex.value - ez.value) <= ex.bound + ez.bound + 1e-9,
              "re-representation float agreement at L=" + std::to_string(L));
    }
  }
  // multiplication properties on random triples
  for (int it = 0; it < 60; ++it) {
    const std::int64_t L = random_order();
    const Cyclo x = random_elem(L), y = random_elem(L), z = random_elem(L);
    c.check(equals_exact(x * y, y * x), "mul commutative at it=" + std::to_string(it));
    c.check(equals_exact((x * y) * z, x * (y * z)), "mul associative at it=" + std::to_string(it));
    c.check(equals_exact((x * y).conjugate(), x.conjugate() * y.conjugate()),
            "conjugate is multiplicative at it=" + std::to_string(it));
    const auto nn = (x * x.conjugate()).eval_float();
    c.check(nn.value.real() >= -nn.bound - 1e-9 && std::abs(nn.value.imag()) <= nn.bound + 1e-9,
            "x * conj(x) is a nonnegative real at it=" + std::to_string(it));
  }
  // pinned root-of-unity facts
  c.check(equals_exact(Cyclo::from_root(0, 5, 20), Cyclo::integer(20, 1)), "e(0) = 1");
  c.check(equals_exact(Cyclo::from_root(1, 2, 4), Cyclo::integer(4, -1)), "e(1/2) = -1");
  {
    const Cyclo i = Cyclo::from_root(1, 4, 4);
    c.check(equals_exact(i * i, Cyclo::integer(4, -1)), "e(1/4)^2 = -1");
  }
  c.check(equals_exact(Cyclo::from_root(1, 3, 3) * Cyclo::from_root(2, 3, 3), Cyclo::integer(3, 1)),
          "e(1/3) e(2/3) = 1");
  {
    Cyclo s = Cyclo::integer(3, 1);
    s += Cyclo::from_root(1, 3, 3);
    s += Cyclo::from_root(2, 3, 3);
    c.check(is_zero_exact(s), "1 + e(1/3) + e(2/3) = 0");
  }
  {
    Cyclo s(9);
    s.add_term(1, 1);
    s.add_term(4, 1);
    s.add_term(7, 1);
    c.check(is_zero_exact(s), "e(1/9) + e(4/9) + e(7/9) = 0");
  }
  return c.take();
}

inline SuiteResult suite_gauss() {
  Checker c("gauss");
  // squared classical sum: G(1;p)^2 = (-1/p) p for odd primes p <= 97
  for (std::int64_t p = 3; p <= 97; p += 2) {
    if (!is_odd_prime(p)) continue;
    const Cyclo g = classical_gauss_sum(1, factorize(p));
    c.check(equals_exact(g * g, Cyclo::integer(p, bigint(legendre(-1, p)) * p)),
            "G(1;p)^2 = (-1/p) p at p=" + std::to_string(p));
  }
  for (std::int64_t q = 3; q <= 49; q += 2) {
    const Modulus m = factorize(q);
    std::vector<std::int64_t> units;
    for (std::int64_t t = 1; t < q; ++t)
      if (std::gcd(t, q) == 1) units.push_back(t);
    std::vector<std::int64_t> squares;
    for (std::int64_t t : units) {
      const std::int64_t v = t * t % q;
      if (std::find(squares.begin(), squares.end(), v) == squares.end()) squares.push_back(v);
    }
    for (const Character& chi : enumerate_characters(m)) {
      // |G(n,chi;q)| is invariant under n -> n t^2
      const Cyclo base = norm_squared(gauss_sum_exact(1, chi));
      for (std::int64_t v : squares)
        c.check(equals_exact(norm_squared(gauss_sum_exact(v, chi)), base),
                "square-twist invariance at q=" + std::to_string(q) + " chi=" +
                    std::to_string(chi.rank()) + " t^2=" + std::to_string(v));
      if (q <= 25) {
        // G(n, conj chi; q) = conj(G(-n, chi; q))
        for (std::int64_t n : {1, 2}) {
          if (std::gcd(n, q) != 1) continue;
          c.check(equals_exact(gauss_sum_exact(n, chi.conjugate()),
                               gauss_sum_exact(-n, chi).conjugate()),
                  "conjugate relation at q=" + std::to_string(q) + " chi=" +
                      std::to_string(chi.rank()) + " n=" + std::to_string(n));
        }
      }
    }
  }
  // |G| never exceeds 2^omega(q) sqrt(q) on the bound-check grid
  for (std::int64_t q : {9, 25, 27, 49}) {
    const BoundCheckReport rep = bound_check(1, factorize(q));
    c.check(rep.holds, "bound check at q=" + std::to_string(q));
  }
  return c.take();
}

inline SuiteResult suite_closedform() {
  Checker c("closedform");
  for (std::int64_t p : {3, 5, 7}) {
    for (int alpha : {2, 3}) {
      const std::int64_t phi = pow_i64(p, alpha - 1) * (p - 1);
      for (std::int64_t m : {2, 3, 4}) {
        // recombination: phi(p^alpha) sum_k C(m,k) A(m,k) equals the
        // prime-power power-mean closed form
        bigint sum = 0;
        for (std::int64_t k = 0; k <= m; ++k) sum += binomial(m, k) * a_closed(p, alpha, m, k);
        c.check(bigint(phi) * sum == lemma9_closed(p, alpha, m),
                "recombination at p=" + std::to_string(p) + " alpha=" + std::to_string(alpha) +
                    " m=" + std::to_string(m));
        // one-step recursion A(m,k) = 2 phi A(m-1,k)
        for (std::int64_t k = 0; k <= m - 1; ++k)
          c.check(a_closed(p, alpha, m, k) == 2 * bigint(phi) * a_closed(p, alpha, m - 1, k),
                  "A(m,k) recursion at p=" + std::to_string(p) + " alpha=" + std::to_string(alpha) +
                      " m=" + std::to_string(m) + " k=" + std::to_string(k));
      }
    }
  }
  // descent T_p(n,k,a) = -T_p(n-1,k,a) for k <= n-1
  for (std::int64_t p : {3, 5, 7, 11}) {
    for (std::int64_t n = 2; n <= 6; ++n)
      for (std::int64_t k = 1; k < n; ++k)
        for (std::int64_t a = 0; a < p; ++a)
          c.check(t_closed(p, n, k, a) == -t_closed(p, n - 1, k, a),
                  "T descent at p=" + std::to_string(p) + " n=" + std::to_string(n) + " k=" +
                      std::to_string(k) + " a=" + std::to_string(a));
  }
  // fourth-moment product formula agrees with the square-full closed form at k=2
  for (std::int64_t q = 3; q <= 1000; q += 2) {
    const Modulus m = factorize(q);
    if (!m.square_full) continue;
    c.check(zhangliu_closed(m, 2) == bigrat(theorem1_closed(m, 2)),
            "k=2 product formula vs square-full closed form at q=" + std::to_string(q));
  }
  return c.take();
}

inline SuiteResult suite_oracle() {
  Checker c("oracle");
  // T sums: brute force vs closed form
  for (std::int64_t p : {3, 5, 7, 11, 13})
    for (std::int64_t n = 1; n <= 6; ++n)
      for (std::int64_t k = 1; k <= n; ++k)
        for (std::int64_t a = 0; a < p; ++a)
          c.check(t_brute(p, n, k, a) == t_closed(p, n, k, a),
                  "t at p=" + std::to_string(p) + " n=" + std::to_string(n) + " k=" +
                      std::to_string(k) + " a=" + std::to_string(a));
  // counting: brute force vs closed form, plus row sums
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      bigint row = 0;
      for (std::int64_t a = 0; a < p; ++a) {
        const bigint b = count_brute(p, n, a);
        row += b;
        c.check(b == count_closed(p, n, a), "count at p=" + std::to_string(p) + " n=" +
                                                std::to_string(n) + " a=" + std::to_string(a));
      }
      c.check(row == bigint_pow(p - 1, n), "count row sum at p=" + std::to_string(p) + " n=" +
                                               std::to_string(n));
    }
  }
  // quadratic Legendre sums
  for (std::int64_t p : {3, 5, 7, 11, 13})
    for (std::int64_t a = 0; a <= p; ++a)
      c.check(quadsum_brute(p, a) == quadsum_closed(p, a),
              "quadsum at p=" + std::to_string(p) + " a=" + std::to_string(a));
  // inner sums over whole unit groups
  for (const auto& [p, alpha] : std::vector<std::pair<std::int64_t, int>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    const std::int64_t pa = pow_i64(p, alpha);
    for (std::int64_t n : {std::int64_t(1), std::int64_t(2), p + 1}) {
      if (mod_i64(n, p) == 0) continue;
      for (std::int64_t a = 1; a < pa; ++a) {
        if (a % p == 0) continue;
        c.check(equals_exact(inner_sum_brute(p, alpha, n, a), inner_sum_closed(p, alpha, n, a)),
                "inner sum at p^alpha=" + std::to_string(pa) + " n=" + std::to_string(n) + " a=" +
                    std::to_string(a));
      }
    }
  }
  // A(m,k)
  for (std::int64_t p : {3, 5})
    for (std::int64_t m : {2, 3})
      for (std::int64_t k = 0; k <= m; ++k)
        c.check(a_brute(p, 2, m, k) == a_closed(p, 2, m, k),
                "A(m,k) at p=" + std::to_string(p) + " m=" + std::to_string(m) + " k=" +
                    std::to_string(k));
  // exact power means vs the square-full closed form; n-independence; float agreement
  for (std::int64_t q : {9, 25, 27, 49}) {
    const Modulus mod = factorize(q);
    for (std::int64_t m : {2, 3}) {
      const bigint closed = theorem1_closed(mod, m);
      for (std::int64_t n : {std::int64_t(1), std::int64_t(2), q - 1}) {
        const PowerMeanResult ex = power_mean_brute(n, mod, m, Backend::exact);
        c.check(ex.integer && *ex.integer == closed,
                "exact power mean at q=" + std::to_string(q) + " m=" + std::to_string(m) + " n=" +
                    std::to_string(n));
        const PowerMeanResult fl = power_mean_brute(n, mod, m, Backend::floating);
        const double exact_d = ex.integer ? ex.integer->convert_to<double>() : 0.0;
        c.check(std::abs(fl.approx.real() - exact_d) <= fl.error_bound + ex.error_bound,
                "float/exact agreement at q=" + std::to_string(q) + " m=" + std::to_string(m) +
                    " n=" + std::to_string(n));
      }
    }
  }
  // the k-th power sum at k = 2 reproduces the quadratic power mean
  {
    const Modulus m9 = factorize(9);
    const PowerMeanResult a = power_sum_k_brute(1, m9, 2, 2, Backend::exact);
    const PowerMeanResult b = power_mean_brute(1, m9, 2, Backend::exact);
    c.check(a.integer && b.integer && *a.integer == *b.integer, "power_sum_k(2) = power_mean");
  }
  return c.take();
}

}  // namespace detail

inline std::vector<std::pair<std::string, std::function<SuiteResult()>>> selftest_suites() {
  return {
      {"arith", detail::suite_arith},     {"characters", detail::suite_characters},
      {"cyclo", detail::suite_cyclo},     {"gauss", detail::suite_gauss},
      {"closedform", detail::suite_closedform}, {"oracle", detail::suite_oracle},
  };
}

// Runs every suite (optionally on a worker pool) and prints one pass/fail
// line per suite in fixed order. `inject_fault` forces a named suite to
// fail (test hook for the failure path). Returns the process exit code.
inline int run_selftest(int parallel, const std::string& inject_fault, std::ostream& out) {
  auto suites = selftest_suites();
  if (!inject_fault.empty()) {
    bool known = false;
    for (const auto& [name, fn] : suites) known = known || name == inject_fault;
    if (!known) {
      out << "selftest: unknown suite '" << inject_fault << "' for fault injection\n";
      return 2;
    }
  }
  std::vector<SuiteResult> results(suites.size());
  detail::pool_run(suites.size(), parallel, [&](std::size_t i) { results[i] = suites[i].second(); });
  bool all_ok = true;
  for (SuiteResult& r : results) {
    if (r.name == inject_fault) r.failures.push_back("injected fault (test hook)");
    if (r.passed()) {
      out << "suite " << r.name << ": PASS (" << r.checks << " checks)\n";
      continue;
    }
    all_ok = false;
    out << "suite " << r.name << ": FAIL (" << r.failures.size() << " of " << r.checks
        << " checks failed)\n";
    const std::size_t cap = 20;
    for (std::size_t i = 0; i < r.failures.size() && i < cap; ++i)
      out << "  " << r.failures[i] << "\n";
    if (r.failures.size() > cap) out << "  (+" << r.failures.size() - cap << " more)\n";
  }
  out << (all_ok ? "selftest: PASS\n" : "selftest: FAIL\n");
  return all_ok ? 0 : 1;
}

}  // namespace qgauss
