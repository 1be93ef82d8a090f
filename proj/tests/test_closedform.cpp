#include <catch_amalgamated.hpp>

#include <cmath>

#include "qgauss/closedform.hpp"

using namespace qgauss;

TEST_CASE("theorem1_closed pinned values and guards", "[closedform]") {
  CHECK(theorem1_closed(factorize(9), 2) == 1296);    // 4 * 9 * 36
  CHECK(theorem1_closed(factorize(9), 3) == 46656);   // 16 * 81 * 36
  CHECK(theorem1_closed(factorize(25), 2) == 40000);  // 4 * 25 * 400
  CHECK(theorem1_closed(factorize(225), 2) == 51840000);
  CHECK_THROWS_AS(theorem1_closed(factorize(45), 2), hypothesis_error);  // not square-full
  CHECK_THROWS_AS(theorem1_closed(factorize(9), 1), hypothesis_error);   // m < 2
}

TEST_CASE("lemma9_closed pinned values and guards", "[closedform]") {
  CHECK(lemma9_closed(3, 2, 2) == 1296);
  CHECK(lemma9_closed(5, 2, 2) == 40000);
  CHECK(lemma9_closed(3, 3, 2) == 34992);  // 4 * 324 * 27
  CHECK_THROWS_AS(lemma9_closed(3, 1, 2), hypothesis_error);
  CHECK_THROWS_AS(lemma9_closed(3, 2, 1), hypothesis_error);
  CHECK_THROWS_AS(lemma9_closed(9, 2, 2), hypothesis_error);  // p not prime
}

TEST_CASE("t_closed pinned values", "[closedform]") {
  for (std::int64_t p : {3, 5, 7, 11}) CHECK(t_closed(p, 1, 1, 0) == 0);
  CHECK(t_closed(5, 2, 2, 0) == 4);   // even k, p | a, (-1/5) = +1
  CHECK(t_closed(3, 2, 1, 0) == 0);   // odd k, p | a
  CHECK(t_closed(5, 3, 2, 1) == 1);   // even k, p does not divide a
  CHECK_THROWS_AS(t_closed(5, 2, 3, 0), hypothesis_error);  // k > n
  CHECK_THROWS_AS(t_closed(5, 2, 0, 0), hypothesis_error);  // k < 1
}

TEST_CASE("quadsum_closed pinned values", "[closedform]") {
  CHECK(quadsum_closed(5, 0) == 4);
  CHECK(quadsum_closed(5, 1) == -1);
  CHECK(quadsum_closed(7, 14) == 6);  // 7 | 14
}

TEST_CASE("count_closed pinned values", "[closedform]") {
  CHECK(count_closed(3, 2, 0) == 2);  // (1,2), (2,1)
  CHECK(count_closed(3, 2, 1) == 1);  // (2,2)
  for (std::int64_t p : {3, 5, 7, 11}) CHECK(count_closed(p, 1, 0) == 0);
}

TEST_CASE("inner-sum classification", "[closedform]") {
  const InnerSumCase full = classify_inner(3, 2, 1);
  CHECK(full.tag == InnerCase::fully_divides);
  const InnerSumCase ex = classify_inner(3, 2, 4);  // 4 = 1*3 + 1
  CHECK(ex.tag == InnerCase::exactly_divides);
  CHECK(ex.r == 1);
  CHECK(ex.epsilon == 1);
  const InnerSumCase ex5 = classify_inner(3, 2, 5);  // 5 = 2*3 - 1
  CHECK(ex5.tag == InnerCase::exactly_divides);
  CHECK(ex5.r == 2);
  CHECK(ex5.epsilon == -1);
  const InnerSumCase none = classify_inner(5, 2, 2);  // 5 does not divide 3
  CHECK(none.tag == InnerCase::not_divisible);
  // tags are exhaustive and exclusive over units
  for (const auto& [p, alpha] : std::vector<std::pair<std::int64_t, int>>{{3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
    const std::int64_t pa = pow_i64(p, alpha);
    for (std::int64_t a = 1; a < pa; ++a) {
      if (a % p == 0) continue;
      const InnerSumCase c = classify_inner(p, alpha, a);
      if (c.tag == InnerCase::exactly_divides) {
        REQUIRE(c.r >= 1);
        REQUIRE(c.r <= p - 1);
        REQUIRE((c.epsilon == 1 || c.epsilon == -1));
        REQUIRE(c.r * pow_i64(p, alpha - 1) + c.epsilon == a);
      }
    }
  }
  CHECK_THROWS_AS(classify_inner(3, 2, 3), std::invalid_argument);  // not a unit
  CHECK_THROWS_AS(classify_inner(3, 1, 2), std::invalid_argument);  // alpha < 2
}

TEST_CASE("inner_sum_closed pinned values", "[closedform]") {
  // a = 1: phi(9) = 6
  CHECK(equals_exact(inner_sum_closed(3, 2, 1, 1), Cyclo::integer(9, 6)));
  // a = 4: -3 - 3 G(1;3); float -3 - 3 sqrt(3) i
  const Cyclo v = inner_sum_closed(3, 2, 1, 4);
  const auto ev = v.eval_float();
  CHECK(ev.value.real() == Catch::Approx(-3.0).margin(1e-9));
  CHECK(ev.value.imag() == Catch::Approx(-3.0 * std::sqrt(3.0)).margin(1e-9));
  // a = 2 mod 25: the not-divisible case vanishes
  CHECK(is_zero_exact(inner_sum_closed(5, 2, 1, 2)));
  CHECK_THROWS_AS(inner_sum_closed(3, 2, 3, 4), hypothesis_error);  // p | n
}

TEST_CASE("a_closed pinned values and guards", "[closedform]") {
  CHECK(a_closed(3, 2, 2, 0) == 72);
  CHECK(a_closed(3, 2, 2, 1) == 0);
  CHECK(a_closed(3, 2, 2, 2) == 144);
  CHECK_THROWS_AS(a_closed(3, 2, 2, 3), hypothesis_error);  // k > m
  CHECK_THROWS_AS(a_closed(3, 1, 2, 0), hypothesis_error);  // alpha < 2
}

TEST_CASE("recombination identity", "[closedform]") {
  for (std::int64_t p : {3, 5, 7}) {
    for (int alpha : {2, 3}) {
      const std::int64_t phi = pow_i64(p, alpha - 1) * (p - 1);
      for (std::int64_t m : {2, 3, 4}) {
        bigint sum = 0;
        for (std::int64_t k = 0; k <= m; ++k) sum += binomial(m, k) * a_closed(p, alpha, m, k);
        REQUIRE(bigint(phi) * sum == lemma9_closed(p, alpha, m));
      }
    }
  }
}

TEST_CASE("A(m,k) recursion", "[closedform]") {
  for (std::int64_t p : {3, 5, 7})
    for (int alpha : {2, 3}) {
      const bigint phi = pow_i64(p, alpha - 1) * (p - 1);
      for (std::int64_t m : {2, 3, 4})
        for (std::int64_t k = 0; k <= m - 1; ++k)
          REQUIRE(a_closed(p, alpha, m, k) == 2 * phi * a_closed(p, alpha, m - 1, k));
    }
}

TEST_CASE("T descent", "[closedform]") {
  for (std::int64_t p : {3, 5, 7, 11})
    for (std::int64_t n = 2; n <= 6; ++n)
      for (std::int64_t k = 1; k < n; ++k)
        for (std::int64_t a = 0; a < p; ++a)
          REQUIRE(t_closed(p, n, k, a) == -t_closed(p, n - 1, k, a));
}

TEST_CASE("zhang_p4_closed pinned values", "[closedform]") {
  const QuadSurd v7 = zhang_p4_closed(7, 1);
  CHECK(v7.rational == 624);
  CHECK(v7.surd_coeff == 0);

  const QuadSurd v5 = zhang_p4_closed(5, 1);
  CHECK(v5.rational == 176);
  CHECK(v5.surd_coeff == 16);
  CHECK(v5.to_double() == Catch::Approx(211.7770876).epsilon(1e-9));

  const QuadSurd v52 = zhang_p4_closed(5, 2);
  CHECK(v52.surd_coeff == -16);  // (2/5) = -1

  CHECK_THROWS_AS(zhang_p4_closed(5, 10), hypothesis_error);  // p | n
}

TEST_CASE("zhang_p6_closed pinned values and the open-question guard", "[closedform]") {
  CHECK(zhang_p6_closed(7) == 13056);
  CHECK(zhang_p6_closed(11) == 102400);  // 10 * 10240
  CHECK_THROWS_WITH(zhang_p6_closed(5), Catch::Matchers::ContainsSubstring("open question"));
}

TEST_CASE("zhangliu_closed pinned values and the k=2 cross-check", "[closedform]") {
  CHECK(zhangliu_closed(factorize(9), 2) == bigrat(1296));
  CHECK(zhangliu_closed(factorize(25), 2) == bigrat(40000));
  CHECK(zhangliu_closed(factorize(9), 3) == bigrat(162));  // 324 * (3,2)^2 * phi(2)/2
  CHECK_THROWS_AS(zhangliu_closed(factorize(45), 2), hypothesis_error);
  for (std::int64_t q = 3; q <= 1000; q += 2) {
    const Modulus m = factorize(q);
    if (!m.square_full) continue;
    REQUIRE(zhangliu_closed(m, 2) == bigrat(theorem1_closed(m, 2)));
  }
}
