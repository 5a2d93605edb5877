#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "normcert/witness.hpp"

using namespace normcert;

namespace {

const NormSpec l1 = NormSpec::pnorm(Exponent::finite(1));

FinSuppVec vec_at(const SeqGen& s, std::uint64_t n) {
  return std::get<FinSuppVec>(s.gen(n));
}

}  // namespace

TEST_CASE("generators produce the advertised sequences") {
  SeqGen t = gen_thm13();
  CHECK(vec_at(t, 5) == chi(5));
  CHECK_THROWS(t.gen(0));
  CHECK_FALSE(static_cast<bool>(t.limit_coeff));

  SeqGen v = gen_cor22();
  FinSuppVec v3 = vec_at(v, 3);
  CHECK(v3.coordinate(1) == Rational(1, 2));
  CHECK(v3.coordinate(2) == Rational(1, 4));
  CHECK(v3.coordinate(3) == Rational(1, 8));
  CHECK(v3.support_size() == 3);
  CHECK(v.limit_coeff(4) == Rational(1, 16));

  SeqGen a1 = gen_lemma41(1);
  CHECK(vec_at(a1, 4).coordinate(3) == Rational(1, 9));
  SeqGen a2 = gen_lemma41(2);
  CHECK(vec_at(a2, 4).coordinate(3) == Rational(1, 3));
  CHECK_THROWS_AS(gen_lemma41(3), std::invalid_argument);

  SeqGen g = gen_lemma41_geo(3);
  CHECK(vec_at(g, 5).coordinate(5) == Rational(1, 32));

  SeqGen d = gen_example_derivative();
  CHECK(std::get<Poly>(d.gen(3)) == Poly::monomial(Rational(1, 3), 3));
}

TEST_CASE("memoized partial sums stay consistent out of order") {
  SeqGen v = gen_cor22();
  FinSuppVec v5 = vec_at(v, 5);
  FinSuppVec v2 = vec_at(v, 2);
  CHECK(v2.support_size() == 2);
  CHECK(v5 - v2 == (vec_at(v, 5) - vec_at(v, 2)));
  CHECK(pnorm_pow(v5 - v2, 1) == Rational(1, 8) + Rational(1, 16) + Rational(1, 32));
}

TEST_CASE("ratio divergence certificate on the rank-one map") {
  NormSpec ind = NormSpec::induced(thm13_default(), l1);
  Certificate c = check_ratio_divergence(
      gen_thm13(), l1, ind,
      [](std::uint64_t n) { return Rational(static_cast<long>(n) - 1); }, 20,
      {2});
  CHECK(c.all_hold());
  CHECK(c.rows.size() == 19);
  for (const auto& r : c.rows) {
    CHECK(r.n != 2);
    CHECK_FALSE(r.undecided);
  }
  CHECK(c.rows[3].n == 5);
  CHECK(c.rows[3].lhs == "6");
  CHECK(c.rows[3].rhs == "4");

  Certificate too_steep = check_ratio_divergence(
      gen_thm13(), l1, ind,
      [](std::uint64_t n) { return Rational(static_cast<long>(n) + 2); }, 10,
      {2});
  CHECK(too_steep.verdict.kind == Verdict::Kind::ViolatedAt);
  CHECK(too_steep.verdict.at == 1);
}

TEST_CASE("cauchy certificate covers every pair up to depth") {
  Certificate c = check_cauchy(
      gen_cor22(), l1,
      [](std::uint64_t m) {
        return Rational(mpz_class(1), mpz_class(1) << static_cast<unsigned>(m));
      },
      12);
  CHECK(c.all_hold());
  CHECK(c.rows.size() == 66);
  bool found = false;
  for (const auto& r : c.rows)
    if (r.n == 2 && r.m && *r.m == 1) {
      found = true;
      CHECK(r.lhs == "1/4");
      CHECK(r.rhs == "1/2");
    }
  CHECK(found);

  Certificate tight = check_cauchy(
      gen_cor22(), l1, [](std::uint64_t) { return Rational(1, 1000); }, 6);
  CHECK(tight.verdict.kind == Verdict::Kind::ViolatedAt);
}

TEST_CASE("tail sums match the telescoping bound") {
  SeqGen s = gen_lemma41(1);
  const std::pair<std::uint64_t, std::uint64_t> pairs[] = {
      {1, 5}, {3, 17}, {10, 40}, {39, 40}};
  for (auto [n, N] : pairs) {
    Rational tail = pnorm_pow(vec_at(s, N) - vec_at(s, n), 1);
    Rational direct(0);
    for (std::uint64_t m = n + 1; m <= N; ++m)
      direct += Rational(1, static_cast<long>(m * m));
    CHECK(tail == direct);
    Rational telescoped = Rational(1, static_cast<long>(n)) -
                          Rational(1, static_cast<long>(N));
    CHECK(tail < telescoped);
  }
}

TEST_CASE("unit gaps in the induced norm defeat the Cauchy property") {
  NormSpec fast = NormSpec::induced(parse_map("thm13:g=4^n:pivot=2"), l1);
  Certificate c = check_not_cauchy(gen_cor22(), fast, Rational(1), 10);
  CHECK(c.all_hold());
  CHECK(c.rows.size() == 9);
  CHECK(c.rows[0].n == 2);
  CHECK(c.rows[0].lhs == "15/4");
  CHECK(c.rows[0].rhs == "1");

  Certificate plain = check_not_cauchy(gen_cor22(), l1, Rational(1), 6);
  CHECK(plain.verdict == Verdict{Verdict::Kind::ViolatedAt, 2});
}

TEST_CASE("separation certificate") {
  Certificate c = check_separation({1, 2, 3, 4}, 2);
  CHECK(c.all_hold());
  CHECK(c.rows.size() == 6);
  for (const auto& r : c.rows) {
    CHECK(r.lhs == "2");
    CHECK(r.rhs == "2");
    CHECK(r.m.has_value());
  }
  CHECK(check_separation({7, 20}, 1).all_hold());
  CHECK_THROWS_AS(check_separation({1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_separation({1, 2}, 0), std::invalid_argument);
}

TEST_CASE("escape certificate pins a stabilized coordinate outside S") {
  Certificate c = check_escape(gen_cor22(), {1, 2, 3}, 10);
  CHECK(c.all_hold());
  CHECK(c.rows.size() == 11);
  bool wi = false, wv = false;
  for (const auto& [k, v] : c.params) {
    if (k == "witness_index") {
      wi = true;
      CHECK(v == "4");
    }
    if (k == "witness_value") {
      wv = true;
      CHECK(v == "1/16");
    }
    if (k == "S") CHECK(v == "{1, 2, 3}");
  }
  CHECK(wi);
  CHECK(wv);

  Certificate gap_set = check_escape(gen_lemma41(1), {1, 3, 5}, 8);
  CHECK(gap_set.all_hold());
  for (const auto& [k, v] : gap_set.params)
    if (k == "witness_index") CHECK(v == "2");

  CHECK_THROWS_AS(check_escape(gen_thm13(), {1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(check_escape(gen_cor22(), {5}, 5), std::invalid_argument);
  CHECK_THROWS_AS(check_escape(gen_cor22(), {0}, 5), std::invalid_argument);
}
