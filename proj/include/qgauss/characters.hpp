#pragma once

// The full Dirichlet character group mod an odd q, evaluated exactly as
// roots of unity. The unit group mod an odd prime power is cyclic, so a
// character is determined by one exponent index per prime-power factor
// against a fixed primitive root; characters mod q are CRT products of
// those components.

#include <complex>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qgauss/arith.hpp"

namespace qgauss {

// Exact value e(num/den) with 0 <= num < den and gcd(num, den) = 1, or the
// zero marker (character evaluated off the unit group).
struct RootOfUnity {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool zero = false;

  static RootOfUnity zero_value() {
    RootOfUnity r;
    r.zero = true;
    return r;
  }

  static RootOfUnity of(std::int64_t num, std::int64_t den) {
    if (den < 1) throw std::invalid_argument("RootOfUnity: denominator must be >= 1");
    RootOfUnity r;
    r.num = mod_i64(num, den);
    r.den = den;
    const std::int64_t g = std::gcd(r.num, r.den);
    if (g > 1) {
      r.num /= g;
      r.den /= g;
    }
    if (r.num == 0) r.den = 1;
    return r;
  }

  bool is_one() const { return !zero && num == 0; }

  RootOfUnity conj() const {
    if (zero) return *this;
    return of(den - num, den);
  }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    if (a.zero || b.zero) return zero_value();
    const std::int64_t d = std::lcm(a.den, b.den);
    return of(a.num * (d / a.den) + b.num * (d / b.den), d);
  }

  std::complex<double> to_complex() const {
    if (zero) return {0.0, 0.0};
    const double tau = 6.283185307179586476925286766559;
    const double angle = tau * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
  }

  bool operator==(const RootOfUnity&) const = default;
};

namespace detail {

// Immutable per-modulus data shared by all characters mod q: the fixed
// primitive roots and full discrete-log tables per prime-power factor.
struct CharacterTable {
  Modulus modulus;
  std::vector<std::int64_t> prime_power;
  std::vector<std::int64_t> generator;
  std::vector<std::int64_t> phi;
  std::vector<std::vector<std::int32_t>> index_of;  // residue -> dlog, -1 for non-units
  std::int64_t exponent = 1;                        // lcm of the phi_i; divides phi(q)
};

inline std::shared_ptr<const CharacterTable> character_table(const Modulus& m) {
  auto t = std::make_shared<CharacterTable>();
  t->modulus = m;
  for (const PrimePower& f : m.factors) {
    const std::int64_t pa = f.value();
    const std::int64_t phi = pa / f.p * (f.p - 1);
    const std::int64_t g = primitive_root(f.p, f.alpha);
    std::vector<std::int32_t> table(static_cast<std::size_t>(pa), -1);
    std::int64_t r = 1;
    for (std::int64_t e = 0; e < phi; ++e) {
      table[static_cast<std::size_t>(r)] = static_cast<std::int32_t>(e);
      r = mul_mod(r, g, pa);
    }
    t->prime_power.push_back(pa);
    t->generator.push_back(g);
    t->phi.push_back(phi);
    t->index_of.push_back(std::move(table));
    t->exponent = std::lcm(t->exponent, phi);
  }
  return t;
}

}  // namespace detail

class Character {
 public:
  Character(std::shared_ptr<const detail::CharacterTable> table, std::vector<std::int64_t> indices)
      : table_(std::move(table)), indices_(std::move(indices)) {
    if (indices_.size() != table_->phi.size())
      throw std::invalid_argument("Character: one index per prime-power factor required");
    for (std::size_t i = 0; i < indices_.size(); ++i)
      if (indices_[i] < 0 || indices_[i] >= table_->phi[i])
        throw std::invalid_argument("Character: index out of range");
  }

  const Modulus& modulus() const { return table_->modulus; }
  const std::vector<std::int64_t>& indices() const { return indices_; }

  bool is_principal() const {
    for (std::int64_t k : indices_)
      if (k != 0) return false;
    return true;
  }

  // Multiplicative order: lcm over factors of phi_i / gcd(k_i, phi_i).
  std::int64_t order() const {
    std::int64_t o = 1;
    for (std::size_t i = 0; i < indices_.size(); ++i)
      o = std::lcm(o, table_->phi[i] / std::gcd(indices_[i], table_->phi[i]));
    return o;
  }

  // Position in the row-major enumeration of the index lattice.
  std::int64_t rank() const {
    std::int64_t r = 0;
    for (std::size_t i = 0; i < indices_.size(); ++i) r = r * table_->phi[i] + indices_[i];
    return r;
  }

  Character conjugate() const {
    std::vector<std::int64_t> idx(indices_.size());
    for (std::size_t i = 0; i < indices_.size(); ++i)
      idx[i] = (table_->phi[i] - indices_[i]) % table_->phi[i];
    return Character(table_, std::move(idx));
  }

  // Pointwise product with a character mod the same q.
  Character times(const Character& o) const {
    if (o.table_->modulus.q != table_->modulus.q)
      throw std::invalid_argument("Character::times: modulus mismatch");
    std::vector<std::int64_t> idx(indices_.size());
    for (std::size_t i = 0; i < indices_.size(); ++i)
      idx[i] = (indices_[i] + o.indices_[i]) % table_->phi[i];
    return Character(table_, std::move(idx));
  }

  // chi(a), exactly. Zero marker when gcd(a, q) > 1; otherwise the product
  // of e(k_i * ind_i(a) / phi_i) over factors, on the common denominator.
  RootOfUnity operator()(std::int64_t a) const {
    const std::int64_t D = table_->exponent;
    std::int64_t num = 0;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      const std::int64_t pa = table_->prime_power[i];
      const std::int32_t ind = table_->index_of[i][static_cast<std::size_t>(mod_i64(a, pa))];
      if (ind < 0) return RootOfUnity::zero_value();
      const std::int64_t phi = table_->phi[i];
      num = (num + (indices_[i] * ind % phi) * (D / phi)) % D;
    }
    return RootOfUnity::of(num, D);
  }

  bool same_character(const Character& o) const {
    return table_->modulus.q == o.table_->modulus.q && indices_ == o.indices_;
  }

  const std::shared_ptr<const detail::CharacterTable>& table() const { return table_; }

 private:
  std::shared_ptr<const detail::CharacterTable> table_;
  std::vector<std::int64_t> indices_;
};

// All phi(q) characters mod q, in row-major order of the index lattice
// (the principal character comes first).
inline std::vector<Character> enumerate_characters(const Modulus& m) {
  auto table = detail::character_table(m);
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(m.phi));
  std::vector<std::int64_t> idx(table->phi.size(), 0);
  while (true) {
    out.emplace_back(table, idx);
    int i = static_cast<int>(idx.size()) - 1;
    while (i >= 0) {
      if (++idx[static_cast<std::size_t>(i)] < table->phi[static_cast<std::size_t>(i)]) break;
      idx[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

inline Character make_character(const Modulus& m, std::vector<std::int64_t> indices) {
  return Character(detail::character_table(m), std::move(indices));
}

inline Character principal_character(const Modulus& m) {
  auto table = detail::character_table(m);
  return Character(table, std::vector<std::int64_t>(table->phi.size(), 0));
}

}  // namespace qgauss
