#include <catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "qgauss/arith.hpp"

using namespace qgauss;

TEST_CASE("factorize on known moduli", "[arith]") {
  const Modulus m27 = factorize(27);
  REQUIRE(m27.factors.size() == 1);
  CHECK(m27.factors[0].p == 3);
  CHECK(m27.factors[0].alpha == 3);
  CHECK(m27.phi == 18);
  CHECK(m27.omega() == 1);
  CHECK(m27.square_full);

  const Modulus m675 = factorize(675);
  REQUIRE(m675.factors.size() == 2);
  CHECK(m675.factors[0].p == 3);
  CHECK(m675.factors[0].alpha == 3);
  CHECK(m675.factors[1].p == 5);
  CHECK(m675.factors[1].alpha == 2);
  CHECK(m675.phi == 360);
  CHECK(m675.omega() == 2);
  CHECK(m675.square_full);

  const Modulus m45 = factorize(45);
  CHECK_FALSE(m45.square_full);  // exponent of 5 is 1
  CHECK(m45.phi == 24);
}

TEST_CASE("factorize rejects unsupported moduli", "[arith]") {
  CHECK_THROWS_AS(factorize(12), hypothesis_error);
  CHECK_THROWS_AS(factorize(2), hypothesis_error);
  CHECK_THROWS_AS(factorize(1), hypothesis_error);
  CHECK_THROWS_AS(factorize(-9), hypothesis_error);
}

TEST_CASE("phi matches a direct unit count for odd q <= 2000", "[arith]") {
  for (std::int64_t q = 3; q <= 2000; q += 2) {
    std::int64_t units = 0;
    for (std::int64_t x = 1; x <= q; ++x) units += std::gcd(x, q) == 1 ? 1 : 0;
    REQUIRE(factorize(q).phi == units);
  }
}

TEST_CASE("legendre symbol on pinned values", "[arith]") {
  CHECK(legendre(1, 7) == 1);
  // squares mod 7 are {1, 2, 4}
  std::set<std::int64_t> squares7;
  for (std::int64_t x = 1; x < 7; ++x) squares7.insert(x * x % 7);
  CHECK(squares7 == std::set<std::int64_t>{1, 2, 4});
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK(legendre(-1, 3) == -1);  // p = 3 mod 4
  CHECK(legendre(0, 5) == 0);
  CHECK(legendre(10, 5) == 0);
}

TEST_CASE("legendre rejects a non-prime or even lower argument", "[arith]") {
  CHECK_THROWS_AS(legendre(2, 9), std::invalid_argument);
  CHECK_THROWS_AS(legendre(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(legendre(2, 15), std::invalid_argument);
}

TEST_CASE("legendre agrees with the Euler criterion for p <= 97", "[arith]") {
  for (std::int64_t p = 3; p <= 97; p += 2) {
    if (!is_odd_prime(p)) continue;
    for (std::int64_t a = 1; a < p; ++a) {
      const std::int64_t e = pow_mod(a, (p - 1) / 2, p);
      const int sym = legendre(a, p);
      REQUIRE(((sym == 1 && e == 1) || (sym == -1 && e == p - 1)));
    }
  }
}

TEST_CASE("legendre is multiplicative in the upper argument", "[arith]") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17}) {
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b)
        REQUIRE(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
  }
}

TEST_CASE("jacobi extends legendre over odd composite lower arguments", "[arith]") {
  for (std::int64_t n = 3; n <= 99; n += 2) {
    const Modulus m = factorize(n);
    for (std::int64_t a = -5; a <= n; ++a) {
      int prod = 1;
      for (const PrimePower& f : m.factors)
        for (int i = 0; i < f.alpha; ++i) prod *= legendre(a, f.p);
      REQUIRE(jacobi(a, n) == prod);
    }
  }
  CHECK_THROWS_AS(jacobi(3, 8), std::invalid_argument);
}

TEST_CASE("primitive_root on pinned values", "[arith]") {
  CHECK(primitive_root(5, 1) == 2);  // orders of 2 mod 5: 2, 4, 3, 1
  CHECK(primitive_root(3, 2) == 2);  // powers of 2 mod 9: 2, 4, 8, 7, 5, 1
  CHECK(primitive_root(7, 1) == 3);  // 3 has order 6 mod 7; 2 has order 3
}

TEST_CASE("primitive_root generates the full unit group", "[arith]") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    for (int alpha = 1; alpha <= 3; ++alpha) {
      const std::int64_t pa = pow_i64(p, alpha);
      if (pa > 20000) continue;
      const std::int64_t g = primitive_root(p, alpha);
      const std::int64_t phi = pa / p * (p - 1);
      std::set<std::int64_t> seen;
      std::int64_t cur = 1;
      for (std::int64_t e = 0; e < phi; ++e) {
        seen.insert(cur);
        cur = mul_mod(cur, g, pa);
      }
      REQUIRE(cur == 1);  // g^phi = 1
      REQUIRE(static_cast<std::int64_t>(seen.size()) == phi);
    }
  }
}

TEST_CASE("discrete_log on pinned values and round trip", "[arith]") {
  CHECK(discrete_log(1, 2, 3, 2) == 0);
  CHECK(discrete_log(7, 2, 3, 2) == 4);  // 2^4 = 16 = 7 mod 9
  CHECK(discrete_log(4, 2, 5, 1) == 2);  // 2^2 = 4
  CHECK_THROWS_AS(discrete_log(3, 2, 3, 2), std::invalid_argument);  // not a unit

  for (const auto& [p, alpha] : std::vector<std::pair<std::int64_t, int>>{{3, 2}, {5, 2}, {7, 2}, {11, 1}, {13, 2}}) {
    const std::int64_t pa = pow_i64(p, alpha);
    const std::int64_t g = primitive_root(p, alpha);
    for (std::int64_t x = 1; x < pa; ++x) {
      if (x % p == 0) continue;
      REQUIRE(pow_mod(g, discrete_log(x, g, p, alpha), pa) == x);
    }
  }
}

TEST_CASE("euler_phi handles general (even) arguments", "[arith]") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(12) == 4);
  for (std::int64_t n = 1; n <= 500; ++n) {
    std::int64_t direct = 0;
    for (std::int64_t x = 1; x <= n; ++x) direct += std::gcd(x, n) == 1 ? 1 : 0;
    REQUIRE(euler_phi(n) == direct);
  }
}

TEST_CASE("binomial basics", "[arith]") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(6, 6) == 1);
  CHECK(binomial(5, 7) == 0);
}
