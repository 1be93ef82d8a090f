#include <catch_amalgamated.hpp>

#include <numeric>

#include "qgauss/characters.hpp"
#include "qgauss/cyclo.hpp"

using namespace qgauss;

TEST_CASE("enumeration counts and order", "[characters]") {
  CHECK(enumerate_characters(factorize(9)).size() == 6);
  CHECK(enumerate_characters(factorize(675)).size() == 360);

  const auto chars7 = enumerate_characters(factorize(7));
  REQUIRE(chars7.size() == 6);
  CHECK(chars7.front().is_principal());
  for (std::size_t i = 0; i < chars7.size(); ++i)
    CHECK(chars7[i].rank() == static_cast<std::int64_t>(i));

  // exactly one character of order 2, and it is the Legendre symbol
  int order2 = 0;
  for (const Character& chi : chars7) {
    if (chi.order() != 2) continue;
    ++order2;
    for (std::int64_t a = 1; a < 7; ++a) {
      const RootOfUnity w = chi(a);
      const int sym = legendre(a, 7);
      CHECK((sym == 1 ? w.is_one() : (w.num == 1 && w.den == 2)));
    }
  }
  CHECK(order2 == 1);
}

TEST_CASE("evaluation pinned values", "[characters]") {
  const Modulus m9 = factorize(9);
  const Character chi0 = principal_character(m9);
  CHECK(chi0(2) == RootOfUnity::of(0, 1));  // exponent 0, value 1
  CHECK(chi0(3).zero);                      // gcd(3, 9) = 3

  const auto chars7 = enumerate_characters(factorize(7));
  // rank 3 is the order-2 (Legendre) character in the cyclic group of order 6
  const Character& leg = chars7[3];
  CHECK(leg.order() == 2);
  const RootOfUnity w = leg(3);
  CHECK((w.num == 1 && w.den == 2));  // chi(3) = -1: 3 is a non-residue mod 7
}

TEST_CASE("conjugate negates indices and values", "[characters]") {
  for (std::int64_t q : {9, 25, 27, 49}) {
    const Modulus m = factorize(q);
    for (const Character& chi : enumerate_characters(m)) {
      const Character conj = chi.conjugate();
      for (std::int64_t a = 1; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        REQUIRE(conj(a) == chi(a).conj());
      }
    }
  }
}

TEST_CASE("multiplicativity over all unit pairs, q <= 49", "[characters]") {
  for (std::int64_t q = 3; q <= 49; q += 2) {
    const Modulus m = factorize(q);
    std::vector<std::int64_t> units;
    for (std::int64_t a = 1; a < q; ++a)
      if (std::gcd(a, q) == 1) units.push_back(a);
    for (const Character& chi : enumerate_characters(m)) {
      for (std::int64_t a : units)
        for (std::int64_t b : units)
          REQUIRE(chi(a) * chi(b) == chi(a * b % q));
      for (std::int64_t a = 1; a <= q; ++a)
        REQUIRE(chi(a).zero == (std::gcd(a, q) != 1));
    }
  }
}

TEST_CASE("orthogonality via exact cyclotomic sums", "[characters]") {
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
      REQUIRE(equals_exact(sum, Cyclo::integer(D, a == 1 ? bigint(m.phi) : bigint(0))));
    }
  }
}

TEST_CASE("character group product structure", "[characters]") {
  const Modulus m45 = factorize(45);
  const auto chars = enumerate_characters(m45);
  REQUIRE(chars.size() == 24);
  // chi * conj(chi) is principal
  for (const Character& chi : chars) CHECK(chi.times(chi.conjugate()).is_principal());
  CHECK_THROWS_AS(make_character(m45, {99, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_character(m45, {0}), std::invalid_argument);
}
