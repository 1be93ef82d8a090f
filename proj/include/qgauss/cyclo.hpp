#pragma once

// Exact arithmetic in Z[zeta_L], the integers extended by an L-th root of
// unity. Values are group-ring elements: an integer coefficient vector
// c[0..L) representing sum_j c[j] * e(j/L). The representation is not
// canonical; exact equality means the difference, read as a polynomial of
// degree < L, is divisible by the L-th cyclotomic polynomial.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qgauss/arith.hpp"

namespace qgauss {

namespace detail {

// Monic cyclotomic polynomial Phi_L, stored sparsely as ascending
// (exponent, coefficient) pairs including the leading term.
struct CycloPoly {
  std::int64_t order = 1;
  std::int64_t degree = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;
};

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact in-place division of a dense polynomial by a sparse monic divisor.
// Returns the quotient; throws if the remainder is nonzero.
inline std::vector<bigint> divide_exact(std::vector<bigint> num, const CycloPoly& den) {
  const std::int64_t nd = static_cast<std::int64_t>(num.size()) - 1;
  if (nd < den.degree) throw std::logic_error("divide_exact: degree underflow");
  std::vector<bigint> quot(static_cast<std::size_t>(nd - den.degree) + 1);
  for (std::int64_t i = nd; i >= den.degree; --i) {
    if (num[static_cast<std::size_t>(i)] == 0) continue;
    bigint c = std::move(num[static_cast<std::size_t>(i)]);
    num[static_cast<std::size_t>(i)] = 0;
    for (const auto& [e, coef] : den.terms) {
      if (e == den.degree) continue;
      num[static_cast<std::size_t>(i - den.degree + e)] -= c * coef;
    }
    quot[static_cast<std::size_t>(i - den.degree)] = std::move(c);
  }
  for (const bigint& c : num)
    if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
  return quot;
}

// Phi_L computed by dividing X^L - 1 by Phi_d over all proper divisors d.
// Memoized; safe to call concurrently.
inline std::shared_ptr<const CycloPoly> cyclotomic_poly(std::int64_t L) {
  if (L < 1) throw std::invalid_argument("cyclotomic_poly: order must be >= 1");
  static std::mutex mu;
  static std::unordered_map<std::int64_t, std::shared_ptr<const CycloPoly>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;
  }
  std::vector<bigint> poly(static_cast<std::size_t>(L) + 1);
  poly[0] = -1;
  poly[static_cast<std::size_t>(L)] = 1;
  for (std::int64_t d : divisors(L)) {
    if (d == L) continue;
    poly = divide_exact(std::move(poly), *cyclotomic_poly(d));
  }
  auto phi = std::make_shared<CycloPoly>();
  phi->order = L;
  phi->degree = static_cast<std::int64_t>(poly.size()) - 1;
  for (std::int64_t e = 0; e < static_cast<std::int64_t>(poly.size()); ++e) {
    const bigint& c = poly[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
      throw std::logic_error("cyclotomic_poly: coefficient out of int64 range");
    phi->terms.emplace_back(e, static_cast<std::int64_t>(c));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(L, phi);
  return it->second;
}

// Remainder of a dense length-L coefficient vector modulo Phi_L.
inline std::vector<bigint> cyclotomic_remainder(std::vector<bigint> v, const CycloPoly& phi) {
  for (std::int64_t i = static_cast<std::int64_t>(v.size()) - 1; i >= phi.degree; --i) {
    if (v[static_cast<std::size_t>(i)] == 0) continue;
    bigint c = std::move(v[static_cast<std::size_t>(i)]);
    v[static_cast<std::size_t>(i)] = 0;
    for (const auto& [e, coef] : phi.terms) {
      if (e == phi.degree) continue;
      v[static_cast<std::size_t>(i - phi.degree + e)] -= c * coef;
    }
  }
  v.resize(static_cast<std::size_t>(phi.degree));
  return v;
}

}  // namespace detail

// Group-ring element of Z[Z_L]; the coefficient type is a template
// parameter so hot loops can run on int64 under an explicit overflow
// guard while the default keeps arbitrary precision.
template <class Coeff>
class CycloSum {
 public:
  explicit CycloSum(std::int64_t order)
      : order_(order), c_(static_cast<std::size_t>(order)) {
    if (order < 1) throw std::invalid_argument("CycloSum: order must be >= 1");
  }

  static CycloSum integer(std::int64_t order, Coeff v) {
    CycloSum s(order);
    s.c_[0] = std::move(v);
    return s;
  }

  // e(num/den) embedded at the working order; den must divide order.
  static CycloSum from_root(std::int64_t num, std::int64_t den, std::int64_t order) {
    if (den < 1) throw std::invalid_argument("from_root: denominator must be >= 1");
    CycloSum s(order);
    if (order % den != 0)
      throw std::invalid_argument("from_root: denominator " + std::to_string(den) +
                                  " does not divide working order " + std::to_string(order));
    s.c_[static_cast<std::size_t>(mod_i64(num, den) * (order / den))] = 1;
    return s;
  }

  std::int64_t order() const { return order_; }
  const std::vector<Coeff>& coeffs() const { return c_; }

  void add_term(std::int64_t index, Coeff v) {
    c_[static_cast<std::size_t>(mod_i64(index, order_))] += std::move(v);
  }

  bool coeffwise_zero() const {
    for (const Coeff& c : c_)
      if (c != 0) return false;
    return true;
  }

  CycloSum& operator+=(const CycloSum& o) {
    check_order(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
  }

  CycloSum& operator-=(const CycloSum& o) {
    check_order(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
  }

  friend CycloSum operator+(CycloSum a, const CycloSum& b) { return a += b; }
  friend CycloSum operator-(CycloSum a, const CycloSum& b) { return a -= b; }

  CycloSum operator-() const {
    CycloSum r(order_);
    for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] = -c_[j];
    return r;
  }

  // Cyclic convolution over nonzero coefficients (indices mod L).
  friend CycloSum operator*(const CycloSum& a, const CycloSum& b) {
    a.check_order(b);
    const std::int64_t L = a.order_;
    std::vector<Coeff> buf(static_cast<std::size_t>(2 * L));
    for (std::int64_t i = 0; i < L; ++i) {
      const Coeff& ai = a.c_[static_cast<std::size_t>(i)];
      if (ai == 0) continue;
      for (std::int64_t j = 0; j < L; ++j) {
        const Coeff& bj = b.c_[static_cast<std::size_t>(j)];
        if (bj == 0) continue;
        buf[static_cast<std::size_t>(i + j)] += ai * bj;
      }
    }
    CycloSum r(L);
    for (std::int64_t j = 0; j < L; ++j) {
      r.c_[static_cast<std::size_t>(j)] = std::move(buf[static_cast<std::size_t>(j)]);
      r.c_[static_cast<std::size_t>(j)] += buf[static_cast<std::size_t>(j + L)];
    }
    return r;
  }

  CycloSum& operator*=(const CycloSum& o) { return *this = *this * o; }

  // Complex conjugation negates indices mod L.
  CycloSum conjugate() const {
    CycloSum r(order_);
    for (std::int64_t j = 0; j < order_; ++j)
      r.c_[static_cast<std::size_t>((order_ - j) % order_)] = c_[static_cast<std::size_t>(j)];
    return r;
  }

  CycloSum scaled(const Coeff& k) const {
    CycloSum r(order_);
    for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j] * k;
    return r;
  }

  CycloSum pow(int m) const {
    if (m < 1) throw std::invalid_argument("CycloSum::pow: exponent must be >= 1");
    CycloSum r = *this;
    for (int i = 1; i < m; ++i) r = r * *this;
    return r;
  }

  // Lift to a larger order (new_order must be a multiple of order).
  CycloSum embedded(std::int64_t new_order) const {
    if (new_order % order_ != 0)
      throw std::invalid_argument("embedded: new order must be a multiple of the current order");
    const std::int64_t k = new_order / order_;
    CycloSum r(new_order);
    for (std::int64_t j = 0; j < order_; ++j)
      r.c_[static_cast<std::size_t>(j * k)] = c_[static_cast<std::size_t>(j)];
    return r;
  }

  struct Approx {
    std::complex<double> value;
    double bound;  // a-priori: l1 norm * (L + 16) * machine epsilon
  };

  // Fixed ascending-index summation; bit-stable across runs and threads.
  Approx eval_float() const {
    const double tau = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    double l1 = 0.0;
    for (std::int64_t j = 0; j < order_; ++j) {
      const Coeff& c = c_[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      const double cd = coeff_to_double(c);
      const double angle = tau * static_cast<double>(j) / static_cast<double>(order_);
      acc += std::complex<double>(cd * std::cos(angle), cd * std::sin(angle));
      l1 += std::abs(cd);
    }
    const double eps = std::numeric_limits<double>::epsilon();
    return Approx{acc, l1 * (static_cast<double>(order_) + 16.0) * eps};
  }

 private:
  void check_order(const CycloSum& o) const {
    if (order_ != o.order_)
      throw std::invalid_argument("CycloSum: order mismatch (" + std::to_string(order_) +
                                  " vs " + std::to_string(o.order_) + ")");
  }

  static double coeff_to_double(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, bigint>) {
      return c.template convert_to<double>();
    } else {
      return static_cast<double>(c);
    }
  }

  std::int64_t order_;
  std::vector<Coeff> c_;
};

using Cyclo = CycloSum<bigint>;

template <class Coeff>
inline Cyclo widen(const CycloSum<Coeff>& x) {
  Cyclo r(x.order());
  for (std::int64_t j = 0; j < x.order(); ++j) {
    const Coeff& c = x.coeffs()[static_cast<std::size_t>(j)];
    if (c != 0) r.add_term(j, bigint(c));
  }
  return r;
}

inline Cyclo widen(const Cyclo& x) { return x; }

namespace detail {
inline std::vector<bigint> reduced_coeffs(const Cyclo& x) {
  return cyclotomic_remainder(x.coeffs(), *cyclotomic_poly(x.order()));
}
}  // namespace detail

// True iff x represents 0, i.e. Phi_L divides the coefficient polynomial.
template <class Coeff>
inline bool is_zero_exact(const CycloSum<Coeff>& x) {
  if (x.coeffwise_zero()) return true;
  for (const bigint& c : detail::reduced_coeffs(widen(x)))
    if (c != 0) return false;
  return true;
}

// Exact equality in Z[zeta_L]. Coefficient-wise equality is accepted as a
// sufficient shortcut; the full test reduces the difference mod Phi_L.
template <class Coeff>
inline bool equals_exact(const CycloSum<Coeff>& x, const CycloSum<Coeff>& y) {
  if (x.order() != y.order())
    throw std::invalid_argument("equals_exact: order mismatch");
  if (x.coeffs() == y.coeffs()) return true;
  return is_zero_exact(widen(x) - widen(y));
}

// The rational integer represented by x, if there is one. The remainder
// mod Phi_L is the unique representative of degree < deg Phi_L, so x is an
// integer exactly when that remainder is a constant polynomial.
template <class Coeff>
inline std::optional<bigint> to_integer(const CycloSum<Coeff>& x) {
  std::vector<bigint> r = detail::reduced_coeffs(widen(x));
  for (std::size_t j = 1; j < r.size(); ++j)
    if (r[j] != 0) return std::nullopt;
  return r.empty() ? bigint(0) : r[0];
}

}  // namespace qgauss
