#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "normcert/finsupp.hpp"
#include "normcert/sampling.hpp"

using namespace normcert;

TEST_CASE("chi and coordinates") {
  FinSuppVec u = chi(3);
  CHECK(u.support_size() == 1);
  CHECK(u.coordinate(3) == Rational(1));
  CHECK(u.coordinate(4) == Rational(0));
  CHECK_FALSE(u.is_zero());
  CHECK_THROWS_AS(chi(0), std::invalid_argument);
}

TEST_CASE("zero entries are never stored") {
  FinSuppVec u;
  u.set(2, Rational(5));
  CHECK(u.support_size() == 1);
  u.set(2, Rational(0));
  CHECK(u.is_zero());

  FinSuppVec v = chi(1) + chi(2);
  CHECK((v - chi(2)) == chi(1));
  CHECK((v - v).is_zero());
  CHECK((Rational(0) * v).is_zero());
}

TEST_CASE("linear structure") {
  FinSuppVec u = chi(5) - Rational(5) * chi(2);
  CHECK(u.coordinate(5) == Rational(1));
  CHECK(u.coordinate(2) == Rational(-5));
  CHECK(u.support_size() == 2);
  CHECK((-u).coordinate(2) == Rational(5));
  CHECK(add(u, -u).is_zero());
  CHECK(scale(Rational(1, 2), u).coordinate(2) == Rational(-5, 2));
}

TEST_CASE("norms on a worked example") {
  FinSuppVec u = chi(5) - Rational(5) * chi(2);
  CHECK(pnorm_pow(u, 1) == Rational(6));
  CHECK(pnorm_pow(u, 2) == Rational(26));
  CHECK(pnorm_pow(u, 3) == Rational(126));
  CHECK(supnorm(u) == Rational(5));
  CHECK(pnorm_pow(FinSuppVec(), 1) == Rational(0));
  CHECK(supnorm(FinSuppVec()) == Rational(0));
  CHECK_THROWS_AS(pnorm_pow(u, 0), std::invalid_argument);
}

TEST_CASE("str and parse round-trip") {
  FinSuppVec u;
  u.set(2, Rational(5));
  u.set(7, Rational(-1, 3));
  CHECK(u.str() == "2:5, 7:-1/3");
  CHECK(FinSuppVec::parse(u.str()) == u);
  CHECK(FinSuppVec::parse("").is_zero());
  CHECK(FinSuppVec::parse("  ").is_zero());
  CHECK(FinSuppVec::parse("3:0").is_zero());
  CHECK(FinSuppVec().str() == "");

  CHECK_THROWS(FinSuppVec::parse("x:1"));
  CHECK_THROWS(FinSuppVec::parse("2:1, 2:3"));
  CHECK_THROWS(FinSuppVec::parse("-3:1"));
  CHECK_THROWS(FinSuppVec::parse("4"));
}

TEST_CASE("norm inequalities hold on seeded vectors") {
  SampleRng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    FinSuppVec u = rng.vec();
    FinSuppVec v = rng.vec();
    Rational c = rng.small_rational();

    CHECK(pnorm_pow(u + v, 1) <= pnorm_pow(u, 1) + pnorm_pow(v, 1));
    CHECK(supnorm(u + v) <= supnorm(u) + supnorm(v));
    for (unsigned long p : {1UL, 2UL, 3UL}) {
      CHECK(pnorm_pow(scale(c, u), p) == rat_pow(abs(c), p) * pnorm_pow(u, p));
      CHECK((pnorm_pow(u, p) == Rational(0)) == u.is_zero());
      CHECK(rat_pow(supnorm(u), p) <= pnorm_pow(u, p));
    }
  }
}

TEST_CASE("seeded sampling is deterministic and in range") {
  SampleRng a(1729), b(1729);
  for (int i = 0; i < 50; ++i) {
    FinSuppVec u = a.vec();
    CHECK(u == b.vec());
    for (const auto& [k, val] : u.entries()) {
      CHECK(k >= 1);
      CHECK(k <= 30);
      CHECK_FALSE(val.is_zero());
    }
  }
  SampleRng c(7);
  for (int i = 0; i < 50; ++i) CHECK_FALSE(c.nonzero_vec().is_zero());
  CHECK_THROWS_AS(SampleRng(1).next(5, 4), std::invalid_argument);
}
