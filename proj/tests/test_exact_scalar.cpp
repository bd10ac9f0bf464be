#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gv/exact_scalar.hpp"

using gv::ExactScalar;
using gv::Rat;

TEST_CASE("surd squares and cancellation") {
  const ExactScalar sqrt2 = ExactScalar::prime_power(2, 1);
  CHECK(sqrt2 * sqrt2 == ExactScalar::integer(2));

  // (-3 pi^-2 / 2) * (4 pi^2 / 3) = -2
  const ExactScalar a =
      ExactScalar::from_rational(Rat(-3, 2)) * ExactScalar::pi_power(-2);
  const ExactScalar b =
      ExactScalar::from_rational(Rat(4, 3)) * ExactScalar::pi_power(2);
  CHECK(a * b == ExactScalar::integer(-2));

  // 2^(3/2) * 2^(1/2) * 3 = 12
  CHECK(ExactScalar::prime_power(2, 3) * ExactScalar::prime_power(2, 1) *
            ExactScalar::integer(3) ==
        ExactScalar::integer(12));
}

TEST_CASE("quotients") {
  CHECK(ExactScalar::integer(81) / ExactScalar::integer(81) == ExactScalar::one());
  // 2^19 3^(69/2) / 3^(1/2) = 2^19 3^34
  const ExactScalar a = ExactScalar::prime_power(2, 38) * ExactScalar::prime_power(3, 69);
  const ExactScalar b = ExactScalar::prime_power(3, 1);
  CHECK(a / b == ExactScalar::prime_power(2, 38) * ExactScalar::prime_power(3, 68));
  CHECK(ExactScalar::pi_power(3) / ExactScalar::pi_power(1) == ExactScalar::pi_power(2));
  CHECK_THROWS_AS(ExactScalar::one() / ExactScalar::zero(), gv::UsageError);
}

TEST_CASE("decimal rendering") {
  CHECK(ExactScalar::prime_power(2, 1).decimal(4) == "1.4142");
  CHECK(ExactScalar::pi_power(2).decimal(3) == "9.870");
  CHECK(ExactScalar::zero().decimal(4) == "0");
}

TEST_CASE("canonical rendering and parsing") {
  const ExactScalar v = -(ExactScalar::prime_power(2, 38) *
                          ExactScalar::prime_power(3, 69) *
                          ExactScalar::prime_power(7, 8) *
                          ExactScalar::prime_power(11, 32) *
                          ExactScalar::prime_power(13, 2));
  CHECK(v.str() == "-2^19*3^(69/2)*7^4*11^16*13");
  CHECK(ExactScalar::parse(v.str()) == v);
  CHECK(ExactScalar::parse("0") == ExactScalar::zero());
  CHECK(ExactScalar::parse("1") == ExactScalar::one());
  CHECK(ExactScalar::parse("-1") == -ExactScalar::one());
  const ExactScalar w = ExactScalar::from_rational(Rat(-27, 4)) * ExactScalar::pi_power(-3);
  CHECK(ExactScalar::parse(w.str()) == w);
}

TEST_CASE("round trips on random values") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> exp_dist(-9, 9);
  std::uniform_int_distribution<int> pi_dist(-4, 4);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  const long primes[] = {2, 3, 5, 7, 11, 13};
  for (int iter = 0; iter < 300; ++iter) {
    ExactScalar a = sign_dist(rng) ? ExactScalar::one() : -ExactScalar::one();
    ExactScalar b = a;
    for (long p : primes) {
      a = a * ExactScalar::prime_power(p, exp_dist(rng));
      b = b * ExactScalar::prime_power(p, exp_dist(rng));
    }
    a = a * ExactScalar::pi_power(pi_dist(rng));
    b = b * ExactScalar::pi_power(pi_dist(rng));
    CHECK(ExactScalar::parse(a.str()) == a);
    CHECK(a * b / b == a);
    CHECK(a / a == ExactScalar::one());
  }
}

TEST_CASE("rational detection and factorials") {
  const ExactScalar big = ExactScalar::from_rational(Rat(Rat("1307674368000")));  // 15!
  CHECK(big.is_rational());
  CHECK(big.rational_value() == Rat("1307674368000"));
  CHECK(!ExactScalar::prime_power(2, 1).is_rational());
  CHECK(!ExactScalar::pi_power(1).is_rational());
  CHECK(ExactScalar::sqrt_rational(Rat(1, 2)) == ExactScalar::prime_power(2, -1));
}

TEST_CASE("json rendering") {
  const ExactScalar v = -(ExactScalar::prime_power(2, 3) * ExactScalar::pi_power(-2));
  CHECK(v.json() == "{\"sign\":-1,\"primes\":{\"2\":\"3/2\"},\"pi\":-2}");
}
