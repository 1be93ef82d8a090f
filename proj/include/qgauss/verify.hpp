#pragma once

// Claim registry behind the `verify` and `table` commands: builds the
// Cartesian parameter grid for a claim, validates every grid point up
// front (hypothesis violations exit before any case runs), then executes
// the closed-form/oracle pairs on a worker pool. Output is buffered per
// case and emitted in grid order, so report streams are byte-identical
// for any worker count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "qgauss/arith.hpp"
#include "qgauss/characters.hpp"
#include "qgauss/closedform.hpp"
#include "qgauss/cyclo.hpp"
#include "qgauss/gauss.hpp"
#include "qgauss/oracle.hpp"
#include "qgauss/report.hpp"

namespace qgauss {

enum class OutputFormat { text, json, csv };

struct VerifyOptions {
  std::vector<std::int64_t> q_list;
  std::vector<std::int64_t> p_list;
  std::optional<std::int64_t> m;
  std::optional<std::pair<std::int64_t, std::int64_t>> m_range;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> n_max;
  std::optional<int> alpha;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> a;
  std::string backend = "auto";  // exact | float | auto
  std::optional<double> tolerance;
  OutputFormat format = OutputFormat::text;
  int parallel = 1;
  bool timings = false;
};

struct VerifyCase {
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::function<VerificationReport()> run;
};

struct VerifyOutcome {
  int exit_code = 0;
  std::int64_t cases = 0;
  std::int64_t mismatches = 0;
};

inline const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names = {
      "theorem1", "lemma9",  "t-sum",    "quad-sum", "count",    "inner-sum",      "a-sum",
      "gauss-square", "multiplicativity", "zhang-p4", "zhang-p6", "zhang-liu", "bounds"};
  return names;
}

namespace detail {

inline std::vector<std::int64_t> list_or(const std::vector<std::int64_t>& given,
                                         std::vector<std::int64_t> def) {
  return given.empty() ? std::move(def) : given;
}

inline std::vector<std::int64_t> moments_or(const VerifyOptions& o, std::vector<std::int64_t> def) {
  if (o.m) return {*o.m};
  if (o.m_range) {
    std::vector<std::int64_t> out;
    for (std::int64_t m = o.m_range->first; m <= o.m_range->second; ++m) out.push_back(m);
    if (out.empty()) throw hypothesis_error("empty m range");
    return out;
  }
  return def;
}

inline std::vector<std::int64_t> ns_or(const VerifyOptions& o, std::vector<std::int64_t> def) {
  return o.n ? std::vector<std::int64_t>{*o.n} : std::move(def);
}

inline std::vector<std::int64_t> range_1_to(std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 1; v <= hi; ++v) out.push_back(v);
  return out;
}

inline std::vector<std::int64_t> residues_mod(std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 0; v < p; ++v) out.push_back(v);
  return out;
}

// Effective absolute float tolerance for a comparison at modulus-scale q.
inline double effective_tolerance(const VerifyOptions& o, std::int64_t q, double closed_abs) {
  if (o.tolerance) return *o.tolerance;
  if (q <= 100) return 1e-6;
  return 1e-3 * std::max(1.0, closed_abs);
}

struct BackendChoice {
  Backend backend = Backend::exact;
  std::string warning;
};

inline BackendChoice choose_power_backend(const VerifyOptions& o, const Modulus& mod,
                                          std::int64_t moment) {
  if (o.backend == "exact") {
    if (!power_mean_exact_feasible(mod, moment))
      throw feasibility_error("exact backend requested but the guard rejects q = " +
                              std::to_string(mod.q) + ", m = " + std::to_string(moment));
    return {Backend::exact, ""};
  }
  if (o.backend == "float") {
    if (!power_mean_float_feasible(mod, moment))
      throw feasibility_error("float backend cost estimate exceeds budget at q = " +
                              std::to_string(mod.q));
    return {Backend::floating, ""};
  }
  if (o.backend != "auto")
    throw hypothesis_error("unknown backend '" + o.backend + "' (use exact, float or auto)");
  if (power_mean_exact_feasible(mod, moment)) return {Backend::exact, ""};
  if (power_mean_float_feasible(mod, moment))
    return {Backend::floating, "exact guard exceeded; float backend used"};
  throw feasibility_error("no feasible backend at q = " + std::to_string(mod.q) + ", m = " +
                          std::to_string(moment));
}

inline std::string format_bigrat(const bigrat& v) {
  const bigint num = boost::multiprecision::numerator(v);
  const bigint den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// One power-mean comparison row (theorem1 / lemma9 share this body).
inline VerificationReport power_mean_report(
    std::string claim, std::vector<std::pair<std::string, std::int64_t>> params,
    const Modulus& mod, std::int64_t n, std::int64_t moment, const bigint& closed,
    const BackendChoice& bc, double tol) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  r.closed_form = closed.str();
  r.backend = bc.backend;
  r.warning = bc.warning;
  const PowerMeanResult pm = power_mean_brute(n, mod, moment, bc.backend);
  if (bc.backend == Backend::exact) {
    r.oracle = pm.integer ? pm.integer->str() : format_complex(pm.approx);
    r.match = pm.integer && *pm.integer == closed;
  } else {
    r.oracle = format_double(pm.approx.real());
    r.tolerance = format_double(tol);
    r.match = std::abs(closed.convert_to<double>() - pm.approx.real()) <= tol;
  }
  return r;
}

inline std::vector<VerifyCase> build_theorem1(const VerifyOptions& o) {
  std::vector<VerifyCase> cases;
  for (std::int64_t q : list_or(o.q_list, {9, 25, 27, 49})) {
    const Modulus mod = factorize(q);
    for (std::int64_t m : moments_or(o, {2, 3})) {
      const bigint closed = theorem1_closed(mod, m);  // validates hypotheses
      const BackendChoice bc = choose_power_backend(o, mod, m);
      for (std::int64_t n : ns_or(o, {1})) {
        if (std::gcd(mod_i64(n, q), q) != 1)
          throw hypothesis_error("theorem1: n = " + std::to_string(n) + " not coprime to q = " +
                                 std::to_string(q));
        const double tol = effective_tolerance(o, q, closed.convert_to<double>());
        cases.push_back(VerifyCase{
            {{"q", q}, {"m", m}, {"n", n}},
            [=] { return power_mean_report("theorem1", {{"q", q}, {"m", m}, {"n", n}}, mod, n, m,
                                           closed, bc, tol); }});
      }
    }
  }
  return cases;
}

inline std::vector<VerifyCase> build_lemma9(const VerifyOptions& o) {
  std::vector<VerifyCase> cases;
  for (std::int64_t p : list_or(o.p_list, {3, 5, 7})) {
    const int alpha = o.alpha.value_or(2);
    const Modulus mod = factorize(pow_i64(p, alpha));
    for (std::int64_t m : moments_or(o, {2, 3})) {
      const bigint closed = lemma9_closed(p, alpha, m);
      const BackendChoice bc = choose_power_backend(o, mod, m);
      for (std::int64_t n : ns_or(o, {1})) {
        if (mod_i64(n, p) == 0)
          throw hypothesis_error("lemma9: n must be coprime to p");
        const double tol = effective_tolerance(o, mod.q, closed.convert_to<double>());
        cases.push_back(VerifyCase{
            {{"p", p}, {"alpha", alpha}, {"m", m}, {"n", n}},
            [=] { return power_mean_report("lemma9", {{"p", p}, {"alpha", alpha}, {"m", m}, {"n", n}},
                                           mod, n, m, closed, bc, tol); }});
      }
    }
  }
  return cases;
}

inline VerificationReport exact_pair_report(std::string claim,
                                            std::vector<std::pair<std::string, std::int64_t>> params,
                                            const bigint& closed, const bigint& oracle) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  r.closed_form = closed.str();
  r.oracle = oracle.str();
  r.backend = Backend::exact;
  r.match = closed == oracle;
  return r;
}

inline std::vector<VerifyCase> build_t_sum(const VerifyOptions& o) {
  std::vector<VerifyCase> cases;
  for (std::int64_t p : list_or(o.p_list, {3, 5, 7})) {
    if (!is_odd_prime(p)) throw hypothesis_error("t-sum: p must be an odd prime");
    for (std::int64_t n : o.n ? std::vector<std::int64_t>{*o.n} : range_1_to(o.n_max.value_or(4))) {
      if (pow_exceeds(p - 1, n, kBruteTupleBudget))
        throw feasibility_error("t-sum: (p-1)^n too large at p = " + std::to_string(p) +
                                ", n = " + std::to_string(n));
      for (std::int64_t k : o.k ? std::vector<std::int64_t>{*o.k} : range_1_to(n)) {
        if (k < 1 || k > n) throw hypothesis_error("t-sum: need 1 <= k <= n");
        for (std::int64_t a : o.a ? std::vector<std::int64_t>{*o.a} : residues_mod(p)) {
          cases.push_back(VerifyCase{
              {{"p", p}, {"n", n}, {"k", k}, {"a", a}},
              [=] { return exact_pair_report("t-sum", {{"p", p}, {"n", n}, {"k", k}, {"a", a}},
                                             t_closed(p, n, k, a), t_brute(p, n, k, a)); }});
        }
      }
    }
  }
  return cases;
}

inline std::vector<VerifyCase> build_quad_sum(const VerifyOptions& o) {
  std::vector<VerifyCase> cases;
  for (std::int64_t p : list_or(o.p_list, {3, 5, 7, 11, 13})) {
    if (!is_odd_prime(p)) throw hypothesis_error("quad-sum: p must be an odd prime");
    for (std::int64_t a : o.a ? std::vector<std::int64_t>{*o.a} : residues_mod(p)) {
      cases.push_back(VerifyCase{
          {{"p", p}, {"a", a}},
          [=] { return exact_pair_report("quad-sum", {{"p", p}, {"a", a}}, quadsum_closed(p, a),
                                         quadsum_brute(p, a)); }});
    }
  }
  return cases;
}

inline std::vector<VerifyCase> build_count(const VerifyOptions& o) {
  std::vector<VerifyCase> cases;
  for (std::int64_t p : list_or(o.p_list, {3, 5, 7})) {
    if (!is_odd_prime(p)) throw hypothesis_error("count: p must be an odd prime");
    for (std::int64_t n : o.n ? std::vector<std::int64_t>{*o.n} : range_1_to(o.n_max.value_or(5))) {
      if (n < 1) throw hypothesis_error("count: n must be >= 1");
      if (pow_exceeds(p - 1, n - 1, kBruteTupleBudget))
        throw feasibility_error("count: (p-1)^(n-1) too large");
      for (std::int64_t a : o.a ? std::vector<std::int64_t>{*o.a} : residues_mod(p)) {
        cases.push_back(VerifyCase{
            {{"p", p}, {"n", n}, {"a", a}},
            [=] { return exact_pair_report("count", {{"p", p}, {"n", n}, {"a", a}},
                                           count_closed(p, n, a), count_brute(p, n, a)); }});
      }
    }
  }
  return cases;
}

inline std::vector<VerifyCase> build_inner_sum(const VerifyOptions& o) {
  std::vector<VerifyCase> cases;
  for (std::int64_t p : list_or(o.p_list, {3, 5})) {
    if (!is_odd_prime(p)) throw hypothesis_error("inner-sum: p must be an odd prime");
    const int alpha = o.alpha.value_or(2);
    if (alpha < 2) throw hypothesis_error("inner-sum: alpha must be >= 2");
    const std::int64_t pa = pow_i64(p, alpha);
    std::vector<std::int64_t> as;
    if (o.a) {
      if (std::gcd(mod_i64(*o.a, pa), pa) != 1)
        throw hypothesis_error("inner-sum: a must be a unit mod p^alpha");
      as.push_back(*o.a);
    } else {
      for (std::int64_t a = 1; a < pa; ++a)
        if (a % p != 0) as.push_back(a);
    }
    for (std::int64_t n : ns_or(o, {1})) {
      if (mod_i64(n, p) == 0) throw hypothesis_error("inner-sum: n must be coprime to p");
      for (std::int64_t a : as) {
        cases.push_back(VerifyCase{
            {{"p", p}, {"alpha", alpha}, {"n", n}, {"a", a}},
            [=] {
              VerificationReport r;
              r.claim = "inner-sum";
              r.params = {{"p", p}, {"alpha", alpha}, {"n", n}, {"a", a}};
              const Cyclo closed = inner_sum_closed(p, alpha, n, a);
              const Cyclo brute = inner_sum_brute(p, alpha, n, a);
              r.closed_form = exact_value_string(closed);
              r.oracle = exact_value_string(brute);
              r.backend = Backend::exact;
              r.match = equals_exact(closed, brute);
              return r;
            }});
      }
    }
  }
  return cases;
}

inline std::vector<VerifyCase> build_a_sum(const VerifyOptions& o) {
  std::vector<VerifyCase> cases;
  for (std::int64_t p : list_or(o.p_list, {3, 5})) {
    const int alpha = o.alpha.value_or(2);
    for (std::int64_t m : moments_or(o, {2, 3})) {
      for (std::int64_t k : o.k ? std::vector<std::int64_t>{*o.k} : residues_mod(m + 1)) {
        const std::int64_t n = o.n.value_or(1);
        (void)a_closed(p, alpha, m, k);  // validates hypotheses up front
        if (pow_exceeds(pow_i64(p, alpha - 1) * (p - 1), m, kBruteTupleBudget))
          throw feasibility_error("a-sum: phi(p^alpha)^m too large");
        cases.push_back(VerifyCase{
            {{"p", p}, {"alpha", alpha}, {"m", m}, {"k", k}, {"n", n}},
            [=] { return exact_pair_report("a-sum",
                                           {{"p", p}, {"alpha", alpha}, {"m", m}, {"k", k}, {"n", n}},
                                           a_closed(p, alpha, m, k), a_brute(p, alpha, m, k, n)); }});
      }
    }
  }
  return cases;
}

inline std::vector<VerifyCase> build_gauss_square(const VerifyOptions& o) {
  std::vector<std::int64_t> ps = o.p_list;
  if (ps.empty())
    for (std::int64_t p = 3; p <= 97; p += 2)
      if (is_odd_prime(p)) ps.push_back(p);
  std::vector<VerifyCase> cases;
  for (std::int64_t p : ps) {
    if (!is_odd_prime(p)) throw hypothesis_error("gauss-square: p must be an odd prime");
    cases.push_back(VerifyCase{
        {{"p", p}},
        [=] {
          VerificationReport r;
          r.claim = "gauss-square";
          r.params = {{"p", p}};
          const bigint closed = bigint(legendre(-1, p)) * p;
          const Modulus mod = factorize(p);
          const Cyclo g = classical_gauss_sum(1, mod);
          const Cyclo square = g * g;
          const std::optional<bigint> oracle = to_integer(square);
          r.closed_form = closed.str();
          r.oracle = oracle ? oracle->str() : exact_value_string(square);
          r.backend = Backend::exact;
          r.match = oracle && *oracle == closed;
          return r;
        }});
  }
  return cases;
}

inline std::vector<VerifyCase> build_multiplicativity(const VerifyOptions& o) {
  std::vector<std::int64_t> qs = list_or(o.q_list, {9, 25});
  if (qs.size() != 2)
    throw hypothesis_error("multiplicativity: exactly two moduli required (use --q-list q1,q2)");
  const Modulus m1 = factorize(qs[0]);
  const Modulus m2 = factorize(qs[1]);
  if (std::gcd(m1.q, m2.q) != 1) throw hypothesis_error("multiplicativity: moduli must be coprime");
  std::vector<VerifyCase> cases;
  for (std::int64_t u : ns_or(o, {1})) {
    if (std::gcd(mod_i64(u, m1.q * m2.q), m1.q * m2.q) != 1)
      throw hypothesis_error("multiplicativity: u must be a unit mod q1*q2");
    const auto chars1 = enumerate_characters(m1);
    const auto chars2 = enumerate_characters(m2);
    for (const Character& c1 : chars1) {
      for (const Character& c2 : chars2) {
        const std::int64_t r1 = c1.rank(), r2 = c2.rank();
        cases.push_back(VerifyCase{
            {{"q1", m1.q}, {"q2", m2.q}, {"u", u}, {"chi1", r1}, {"chi2", r2}},
            [=] {
              VerificationReport r;
              r.claim = "multiplicativity";
              r.params = {{"q1", m1.q}, {"q2", m2.q}, {"u", u}, {"chi1", r1}, {"chi2", r2}};
              const MultiplicativitySides sides = multiplicativity_sides(u, m1, m2, c1, c2);
              r.closed_form = exact_value_string(sides.lhs);
              r.oracle = exact_value_string(sides.rhs);
              r.backend = Backend::exact;
              r.match = sides.equal;
              return r;
            }});
      }
    }
  }
  return cases;
}

inline std::vector<VerifyCase> build_zhang_p4(const VerifyOptions& o) {
  std::vector<VerifyCase> cases;
  for (std::int64_t p : list_or(o.p_list, {5, 7, 11, 13})) {
    for (std::int64_t n : ns_or(o, {1, 2})) {
      const QuadSurd closed = zhang_p4_closed(p, n);  // validates
      const Modulus mod = factorize(p);
      const double tol = effective_tolerance(o, p, std::abs(closed.to_double()));
      cases.push_back(VerifyCase{
          {{"p", p}, {"n", n}},
          [=] {
            VerificationReport r;
            r.claim = "zhang-p4";
            r.params = {{"p", p}, {"n", n}};
            r.closed_form = closed.surd_coeff == 0 ? closed.rational.str()
                                                   : format_double(closed.to_double());
            const PowerMeanResult pm = power_mean_brute(n, mod, 2, Backend::floating);
            r.oracle = format_double(pm.approx.real());
            r.backend = Backend::floating;
            r.tolerance = format_double(tol);
            r.match = std::abs(closed.to_double() - pm.approx.real()) <= tol;
            return r;
          }});
    }
  }
  return cases;
}

inline std::vector<VerifyCase> build_zhang_p6(const VerifyOptions& o) {
  std::vector<VerifyCase> cases;
  for (std::int64_t p : list_or(o.p_list, {7, 11})) {
    const bigint closed = zhang_p6_closed(p);  // rejects p = 1 mod 4 naming the open question
    for (std::int64_t n : ns_or(o, {1})) {
      if (mod_i64(n, p) == 0) throw hypothesis_error("zhang-p6: n must be coprime to p");
      const Modulus mod = factorize(p);
      const double tol = effective_tolerance(o, p, closed.convert_to<double>());
      cases.push_back(VerifyCase{
          {{"p", p}, {"n", n}},
          [=] {
            VerificationReport r;
            r.claim = "zhang-p6";
            r.params = {{"p", p}, {"n", n}};
            r.closed_form = closed.str();
            const PowerMeanResult pm = power_mean_brute(n, mod, 3, Backend::floating);
            r.oracle = format_double(pm.approx.real());
            r.backend = Backend::floating;
            r.tolerance = format_double(tol);
            r.match = std::abs(closed.convert_to<double>() - pm.approx.real()) <= tol;
            return r;
          }});
    }
  }
  return cases;
}

inline std::vector<VerifyCase> build_zhang_liu(const VerifyOptions& o) {
  std::vector<VerifyCase> cases;
  for (std::int64_t q : list_or(o.q_list, {9, 25})) {
    const Modulus mod = factorize(q);
    for (std::int64_t k : o.k ? std::vector<std::int64_t>{*o.k} : std::vector<std::int64_t>{2, 3}) {
      const bigrat closed = zhangliu_closed(mod, k);  // validates square-full etc.
      for (std::int64_t n : ns_or(o, {1})) {
        if (std::gcd(mod_i64(n, q), q) != 1)
          throw hypothesis_error("zhang-liu: n must be coprime to q");
        const double tol = effective_tolerance(o, q, std::abs(closed.convert_to<double>()));
        cases.push_back(VerifyCase{
            {{"q", q}, {"k", k}, {"n", n}},
            [=] {
              VerificationReport r;
              r.claim = "zhang-liu";
              r.params = {{"q", q}, {"k", k}, {"n", n}};
              r.closed_form = format_bigrat(closed);
              const PowerMeanResult pm = power_sum_k_brute(n, mod, k, 2, Backend::floating);
              r.oracle = format_double(pm.approx.real());
              r.backend = Backend::floating;
              r.tolerance = format_double(tol);
              r.match = std::abs(closed.convert_to<double>() - pm.approx.real()) <= tol;
              return r;
            }});
      }
    }
  }
  return cases;
}

inline std::vector<VerifyCase> build_bounds(const VerifyOptions& o) {
  std::vector<VerifyCase> cases;
  for (std::int64_t q : list_or(o.q_list, {7, 9, 25, 27, 49})) {
    const Modulus mod = factorize(q);
    for (std::int64_t n : ns_or(o, {1})) {
      if (std::gcd(mod_i64(n, q), q) != 1)
        throw hypothesis_error("bounds: n must be coprime to q");
      const double tol = o.tolerance.value_or(1e-6);
      cases.push_back(VerifyCase{
          {{"q", q}, {"n", n}},
          [=] {
            VerificationReport r;
            r.claim = "bounds";
            r.params = {{"q", q}, {"n", n}};
            const BoundCheckReport rep = bound_check(n, mod, tol);
            r.closed_form = format_double(rep.bound);
            r.oracle = format_double(rep.max_abs);
            r.backend = Backend::floating;
            r.tolerance = format_double(tol);
            r.match = rep.holds;
            return r;
          }});
    }
  }
  return cases;
}

inline std::vector<VerifyCase> build_cases(const std::string& claim, const VerifyOptions& o) {
  if (claim == "theorem1") return build_theorem1(o);
  if (claim == "lemma9") return build_lemma9(o);
  if (claim == "t-sum") return build_t_sum(o);
  if (claim == "quad-sum") return build_quad_sum(o);
  if (claim == "count") return build_count(o);
  if (claim == "inner-sum") return build_inner_sum(o);
  if (claim == "a-sum") return build_a_sum(o);
  if (claim == "gauss-square") return build_gauss_square(o);
  if (claim == "multiplicativity") return build_multiplicativity(o);
  if (claim == "zhang-p4") return build_zhang_p4(o);
  if (claim == "zhang-p6") return build_zhang_p6(o);
  if (claim == "zhang-liu") return build_zhang_liu(o);
  if (claim == "bounds") return build_bounds(o);
  std::string names;
  for (const std::string& c : claim_names()) names += (names.empty() ? "" : ", ") + c;
  throw hypothesis_error("unknown claim '" + claim + "' (expected one of: " + names + ")");
}

// Runs jobs 0..count-1 on `workers` threads; each job's result is buffered
// and consumed in index order, so output does not depend on scheduling.
inline void pool_run(std::size_t count, int workers, const std::function<void(std::size_t)>& job) {
  workers = std::max(1, workers);
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  const int spawn = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), count));
  threads.reserve(static_cast<std::size_t>(spawn));
  for (int t = 0; t < spawn; ++t) {
    threads.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        job(i);
      }
    });
  }
  for (std::thread& th : threads) th.join();
}

}  // namespace detail

// Executes one claim over its parameter grid. Exit code 0 when every case
// matches, 1 on any mismatch. Hypothesis violations and guard rejections
// throw before any case runs (the CLI maps them to exit 2).
inline VerifyOutcome run_verify(const std::string& claim, const VerifyOptions& options,
                                std::ostream& out) {
  std::vector<VerifyCase> cases = detail::build_cases(claim, options);
  if (cases.empty()) throw hypothesis_error(claim + ": empty parameter grid");

  std::vector<VerificationReport> reports(cases.size());
  std::vector<std::string> errors(cases.size());
  detail::pool_run(cases.size(), options.parallel, [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      reports[i] = cases[i].run();
    } catch (const std::exception& e) {
      errors[i] = e.what();
      return;
    }
    if (options.timings)
      reports[i].elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
  });
  for (const std::string& e : errors)
    if (!e.empty()) throw hypothesis_error(e);

  VerifyOutcome outcome;
  outcome.cases = static_cast<std::int64_t>(reports.size());
  if (options.format == OutputFormat::csv) out << csv_header(reports.front()) << "\n";
  for (const VerificationReport& r : reports) {
    switch (options.format) {
      case OutputFormat::json: out << report_to_json(r) << "\n"; break;
      case OutputFormat::csv: out << report_to_csv(r) << "\n"; break;
      case OutputFormat::text: out << report_to_text(r) << "\n"; break;
    }
    if (!r.match) ++outcome.mismatches;
  }
  outcome.exit_code = outcome.mismatches > 0 ? 1 : 0;
  return outcome;
}

// `table`: closed-form values of the square-full power-mean identity with
// oracle columns where the guards admit one; rows ordered q asc, then m.
inline VerifyOutcome run_table(const VerifyOptions& options, std::ostream& out) {
  std::vector<std::int64_t> qs = options.q_list;
  if (qs.empty()) throw hypothesis_error("table: empty q list (use --q or --q-list)");
  std::sort(qs.begin(), qs.end());
  std::vector<std::int64_t> ms = detail::moments_or(options, {2, 3});
  std::sort(ms.begin(), ms.end());
  const std::int64_t n = options.n.value_or(1);

  struct Row {
    std::int64_t q, m, n;
    bigint closed;
    Modulus mod;
    std::optional<detail::BackendChoice> bc;  // nullopt: skipped(guard)
    double tol = 0.0;
  };
  std::vector<Row> rows;
  for (std::int64_t q : qs) {
    const Modulus mod = factorize(q);
    for (std::int64_t m : ms) {
      Row row{q, m, n, theorem1_closed(mod, m), mod, std::nullopt, 0.0};
      if (std::gcd(mod_i64(n, q), q) != 1)
        throw hypothesis_error("table: n must be coprime to q = " + std::to_string(q));
      try {
        row.bc = detail::choose_power_backend(options, mod, m);
      } catch (const feasibility_error&) {
        row.bc = std::nullopt;
      }
      row.tol = detail::effective_tolerance(options, q, row.closed.convert_to<double>());
      rows.push_back(std::move(row));
    }
  }

  std::vector<std::string> oracle(rows.size()), backend(rows.size()), match(rows.size());
  std::vector<std::string> errors(rows.size());
  detail::pool_run(rows.size(), options.parallel, [&](std::size_t i) {
    const Row& row = rows[i];
    if (!row.bc) {
      oracle[i] = "skipped(guard)";
      backend[i] = "none";
      match[i] = "skipped";
      return;
    }
    try {
      const PowerMeanResult pm = power_mean_brute(row.n, row.mod, row.m, row.bc->backend);
      if (row.bc->backend == Backend::exact) {
        oracle[i] = pm.integer ? pm.integer->str() : format_complex(pm.approx);
        match[i] = (pm.integer && *pm.integer == row.closed) ? "true" : "false";
      } else {
        oracle[i] = format_double(pm.approx.real());
        match[i] = std::abs(row.closed.convert_to<double>() - pm.approx.real()) <= row.tol
                       ? "true"
                       : "false";
      }
      backend[i] = backend_name(row.bc->backend);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (const std::string& e : errors)
    if (!e.empty()) throw hypothesis_error(e);

  VerifyOutcome outcome;
  outcome.cases = static_cast<std::int64_t>(rows.size());
  if (options.format == OutputFormat::csv) out << "q,m,n,closed_form,oracle,backend,match\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    if (options.format == OutputFormat::json) {
      nlohmann::ordered_json j;
      j["q"] = row.q;
      j["m"] = row.m;
      j["n"] = row.n;
      j["closed_form"] = row.closed.str();
      j["oracle"] = oracle[i];
      j["backend"] = backend[i];
      j["match"] = match[i];
      out << j.dump() << "\n";
    } else if (options.format == OutputFormat::csv) {
      out << row.q << "," << row.m << "," << row.n << "," << row.closed.str() << "," << oracle[i]
          << "," << backend[i] << "," << match[i] << "\n";
    } else {
      out << "q=" << row.q << " m=" << row.m << " n=" << row.n << " closed=" << row.closed.str()
          << " oracle=" << oracle[i] << " backend=" << backend[i] << " match=" << match[i] << "\n";
    }
    if (match[i] == "false") ++outcome.mismatches;
  }
  outcome.exit_code = outcome.mismatches > 0 ? 1 : 0;
  return outcome;
}

}  // namespace qgauss
