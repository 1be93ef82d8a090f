#include <catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "qgauss/cyclo.hpp"

using namespace qgauss;

TEST_CASE("from_root pinned values", "[cyclo]") {
  CHECK(equals_exact(Cyclo::from_root(0, 7, 28), Cyclo::integer(28, 1)));  // e(0) = 1
  CHECK(equals_exact(Cyclo::from_root(1, 2, 6), Cyclo::integer(6, -1)));   // e(1/2) = -1
  const Cyclo i = Cyclo::from_root(1, 4, 8);
  CHECK(equals_exact(i * i, Cyclo::integer(8, -1)));  // e(1/4)^2 = e(1/2)
  CHECK_THROWS_AS(Cyclo::from_root(1, 5, 12), std::invalid_argument);  // 5 does not divide 12
  CHECK_THROWS_AS(Cyclo::from_root(1, 0, 12), std::invalid_argument);
}

TEST_CASE("arithmetic basics and order mismatch", "[cyclo]") {
  const Cyclo one = Cyclo::integer(12, 1);
  Cyclo x(12);
  x.add_term(3, 2);
  x.add_term(7, -1);
  CHECK(equals_exact(x * one, x));
  CHECK((x.conjugate().conjugate().coeffs() == x.coeffs()));  // involution, coefficient-wise
  CHECK(equals_exact(Cyclo::from_root(1, 3, 3) * Cyclo::from_root(2, 3, 3), Cyclo::integer(3, 1)));
  CHECK_THROWS_AS(x + Cyclo(10), std::invalid_argument);
  CHECK_THROWS_AS(x * Cyclo(10), std::invalid_argument);
  CHECK_THROWS_AS(equals_exact(x, Cyclo(10)), std::invalid_argument);
}

TEST_CASE("exact equality detects cyclotomic vanishing", "[cyclo]") {
  Cyclo s = Cyclo::integer(3, 1);
  s += Cyclo::from_root(1, 3, 3);
  s += Cyclo::from_root(2, 3, 3);
  CHECK(is_zero_exact(s));  // all cube roots of unity sum to zero

  Cyclo t(9);
  t.add_term(1, 1);
  t.add_term(4, 1);
  t.add_term(7, 1);
  CHECK(is_zero_exact(t));  // e(1/9)(1 + e(1/3) + e(2/3))
  CHECK(equals_exact(t, Cyclo(9)));

  // re-representation: adding shifted multiples of Phi_L does not change the value
  const auto phi = detail::cyclotomic_poly(12);
  Cyclo m5 = Cyclo::integer(12, 5);
  Cyclo m5b = m5;
  for (const auto& [e, coef] : phi->terms) m5b.add_term(e + 2, bigint(coef) * 3);
  CHECK(m5b.coeffs() != m5.coeffs());
  CHECK(equals_exact(m5, m5b));
  CHECK(to_integer(m5b).value() == 5);
}

TEST_CASE("to_integer extracts rational integers only", "[cyclo]") {
  CHECK(to_integer(Cyclo::integer(20, -42)).value() == -42);
  CHECK_FALSE(to_integer(Cyclo::from_root(1, 4, 4)).has_value());  // i is not rational
  CHECK(to_integer(Cyclo::from_root(1, 2, 2)).value() == -1);
}

TEST_CASE("eval_float pinned values", "[cyclo]") {
  const auto seven = Cyclo::integer(5, 7).eval_float();
  CHECK(std::abs(seven.value - std::complex<double>(7.0, 0.0)) < 1e-12);

  const auto i = Cyclo::from_root(1, 4, 4).eval_float();
  CHECK(std::abs(i.value - std::complex<double>(0.0, 1.0)) < 1e-12);

  Cyclo x = Cyclo::integer(3, 1);
  x.add_term(1, 2);  // 1 + 2 e(1/3) = i sqrt(3)
  const auto v = x.eval_float();
  CHECK(std::abs(v.value.real()) < 1e-9);
  CHECK(v.value.imag() == Catch::Approx(1.7320508075688772).epsilon(1e-9));
}

TEST_CASE("random algebra properties", "[cyclo]") {
  std::mt19937 rng(987654);
  for (int it = 0; it < 60; ++it) {
    const std::int64_t L = 1 + static_cast<std::int64_t>(rng() % 360);
    const auto rand_elem = [&] {
      Cyclo x(L);
      const int terms = 1 + static_cast<int>(rng() % 6);
      for (int t = 0; t < terms; ++t)
        x.add_term(static_cast<std::int64_t>(rng() % L), bigint(static_cast<int>(rng() % 15) - 7));
      return x;
    };
    const Cyclo x = rand_elem(), y = rand_elem(), z = rand_elem();
    REQUIRE(equals_exact(x * y, y * x));
    REQUIRE(equals_exact((x * y) * z, x * (y * z)));
    REQUIRE(equals_exact((x * y).conjugate(), x.conjugate() * y.conjugate()));
    const auto nn = (x * x.conjugate()).eval_float();
    REQUIRE(nn.value.real() >= -nn.bound - 1e-9);
    REQUIRE(std::abs(nn.value.imag()) <= nn.bound + 1e-9);
    // float evaluation stays within its own a-priori bound of the exact value
    const auto ex = x.eval_float();
    const auto ey = y.eval_float();
    const bool float_eq = std::abs(ex.value - ey.value) <= ex.bound + ey.bound + 1e-9;
    REQUIRE(equals_exact(x, y) == float_eq);
  }
}

TEST_CASE("exact equality is an equivalence relation", "[cyclo]") {
  std::mt19937 rng(24680);
  for (int it = 0; it < 40; ++it) {
    const std::int64_t L = 2 + static_cast<std::int64_t>(rng() % 359);
    const auto phi = detail::cyclotomic_poly(L);
    if (phi->degree >= L) continue;
    Cyclo x(L);
    for (int t = 0; t < 5; ++t)
      x.add_term(static_cast<std::int64_t>(rng() % L), bigint(static_cast<int>(rng() % 9) - 4));
    const auto smudge = [&](const Cyclo& base) {
      Cyclo out = base;
      const std::int64_t shift = static_cast<std::int64_t>(rng() % (L - phi->degree));
      const int scale = static_cast<int>(rng() % 5) - 2;
      for (const auto& [e, coef] : phi->terms) out.add_term(e + shift, bigint(coef) * scale);
      return out;
    };
    const Cyclo y = smudge(x);
    const Cyclo z = smudge(y);
    REQUIRE(equals_exact(x, x));                       // reflexive
    REQUIRE(equals_exact(x, y));
    REQUIRE(equals_exact(y, x));                       // symmetric
    REQUIRE(equals_exact(y, z));
    REQUIRE(equals_exact(x, z));                       // transitive
    REQUIRE_FALSE(equals_exact(x, x + Cyclo::integer(L, 1)));
  }
}

TEST_CASE("embedded lifts preserve values", "[cyclo]") {
  const Cyclo x = Cyclo::from_root(1, 3, 3);
  const Cyclo lifted = x.embedded(12);
  CHECK(equals_exact(lifted, Cyclo::from_root(1, 3, 12)));
  CHECK_THROWS_AS(x.embedded(10), std::invalid_argument);
}
