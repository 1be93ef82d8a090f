#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numeric>

#include "qgauss/gauss.hpp"

using namespace qgauss;

TEST_CASE("classical sums on pinned values", "[gauss]") {
  const Modulus m3 = factorize(3);
  const Cyclo g3 = classical_gauss_sum(1, m3);
  // squares mod 3 are 1, 1, 0: G(1;3) = 1 + 2 e(1/3)
  Cyclo expect = Cyclo::integer(3, 1);
  expect.add_term(1, 2);
  CHECK(equals_exact(g3, expect));
  const auto v = g3.eval_float();
  CHECK(std::abs(v.value.real()) < 1e-12);
  CHECK(v.value.imag() == Catch::Approx(std::sqrt(3.0)).epsilon(1e-12));

  CHECK(equals_exact(g3 * g3, Cyclo::integer(3, -3)));
  const Cyclo g5 = classical_gauss_sum(1, factorize(5));
  CHECK(equals_exact(g5 * g5, Cyclo::integer(5, 5)));
}

TEST_CASE("squared classical sum identity for p <= 97", "[gauss]") {
  for (std::int64_t p = 3; p <= 97; p += 2) {
    if (!is_odd_prime(p)) continue;
    const Cyclo g = classical_gauss_sum(1, factorize(p));
    REQUIRE(equals_exact(g * g, Cyclo::integer(p, bigint(legendre(-1, p)) * p)));
  }
}

TEST_CASE("generalized sum pinned values", "[gauss]") {
  const Modulus m9 = factorize(9);
  // principal character: units mod 9 have squares 1, 4, 7 (twice each), and
  // the sum collapses to zero
  const Cyclo g = gauss_sum_exact(1, principal_character(m9));
  Cyclo expect(gauss_order(m9));
  for (std::int64_t r : {1, 4, 7}) expect.add_term(r * (gauss_order(m9) / 9), 2);
  CHECK(equals_exact(g, expect));
  CHECK(is_zero_exact(g));

  // order-2 character mod 7: the sum vanishes, because a -> 7-a fixes a^2
  // while flipping the character sign (7 = 3 mod 4). Confirmed by a direct
  // complex-arithmetic oracle below.
  const auto chars7 = enumerate_characters(factorize(7));
  const Cyclo g7 = gauss_sum_exact(1, chars7[3]);
  REQUIRE(chars7[3].order() == 2);
  CHECK(is_zero_exact(g7));
  std::complex<double> direct(0.0, 0.0);
  for (std::int64_t a = 1; a < 7; ++a) {
    const double angle = 2.0 * 3.14159265358979323846 * double(a * a % 7) / 7.0;
    direct += double(legendre(a, 7)) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  CHECK(std::abs(direct) < 1e-12);

  // bound invariant on the GaussSumValue float side
  for (const Character& chi : enumerate_characters(m9)) {
    const GaussSumValue v = gauss_sum(1, chi);
    CHECK(std::abs(v.approx) <= 2.0 * 3.0 + 1e-6);
    // exact and float agree within the reported bound
    const auto ev = v.exact.eval_float();
    CHECK(std::abs(v.approx - ev.value) <= v.error_bound + ev.bound);
  }
}

TEST_CASE("gauss_sum rejects n sharing a factor with q", "[gauss]") {
  const Modulus m9 = factorize(9);
  CHECK_THROWS_AS(gauss_sum_exact(3, principal_character(m9)), hypothesis_error);
  CHECK_THROWS_AS(gauss_sum_float(6, principal_character(m9)), hypothesis_error);
}

TEST_CASE("n depends only on its residue mod q", "[gauss]") {
  const Modulus m25 = factorize(25);
  for (const Character& chi : enumerate_characters(m25)) {
    CHECK(equals_exact(gauss_sum_exact(2, chi), gauss_sum_exact(27, chi)));
    CHECK(equals_exact(gauss_sum_exact(-1, chi), gauss_sum_exact(24, chi)));
  }
}

TEST_CASE("square-twist invariance of |G|", "[gauss]") {
  for (std::int64_t q = 3; q <= 49; q += 2) {
    const Modulus m = factorize(q);
    std::vector<std::int64_t> squares;
    for (std::int64_t t = 1; t < q; ++t) {
      if (std::gcd(t, q) != 1) continue;
      const std::int64_t v = t * t % q;
      if (std::find(squares.begin(), squares.end(), v) == squares.end()) squares.push_back(v);
    }
    for (const Character& chi : enumerate_characters(m)) {
      const Cyclo base = norm_squared(gauss_sum_exact(1, chi));
      for (std::int64_t v : squares)
        REQUIRE(equals_exact(norm_squared(gauss_sum_exact(v, chi)), base));
    }
  }
}

TEST_CASE("conjugate character relation", "[gauss]") {
  for (std::int64_t q = 3; q <= 25; q += 2) {
    const Modulus m = factorize(q);
    for (const Character& chi : enumerate_characters(m)) {
      for (std::int64_t n : {1, 2}) {
        if (std::gcd(static_cast<std::int64_t>(n), q) != 1) continue;
        REQUIRE(equals_exact(gauss_sum_exact(n, chi.conjugate()),
                             gauss_sum_exact(-n, chi).conjugate()));
      }
    }
  }
}

TEST_CASE("multiplicativity across coprime moduli", "[gauss]") {
  const Modulus m9 = factorize(9);
  const Modulus m25 = factorize(25);
  // all 6 x 20 character pairs at u = 1
  for (const Character& c1 : enumerate_characters(m9))
    for (const Character& c2 : enumerate_characters(m25))
      REQUIRE(multiplicativity_check(1, m9, m25, c1, c2));

  // u = 2, 9 x 49, principal x principal
  const Modulus m49 = factorize(49);
  CHECK(multiplicativity_check(2, m9, m49, principal_character(m9), principal_character(m49)));

  // non-coprime moduli are rejected
  CHECK_THROWS_AS(
      multiplicativity_check(1, m9, factorize(9), principal_character(m9), principal_character(m9)),
      std::invalid_argument);
  // u must be a unit mod the product
  CHECK_THROWS_AS(
      multiplicativity_check(3, m9, m25, principal_character(m9), principal_character(m25)),
      std::invalid_argument);
}

TEST_CASE("bound check on sample moduli", "[gauss]") {
  for (std::int64_t q : {7, 9, 25, 225}) {
    const Modulus m = factorize(q);
    const BoundCheckReport rep = bound_check(1, m);
    CHECK(rep.holds);
    CHECK(rep.bound == Catch::Approx(std::ldexp(std::sqrt(double(q)), m.omega())));
  }
  // Weil bound at prime modulus: 2 sqrt(7)
  const BoundCheckReport rep7 = bound_check(1, factorize(7));
  CHECK(rep7.max_abs <= 2.0 * std::sqrt(7.0) + 1e-6);
}
