#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "normcert/poly.hpp"
#include "normcert/sampling.hpp"

using namespace normcert;

TEST_CASE("construction trims trailing zeros") {
  Poly f({Rational(1), Rational(2), Rational(0)});
  CHECK(f.degree() == 1);
  CHECK(f.coeff(0) == Rational(1));
  CHECK(f.coeff(5) == Rational(0));
  CHECK(Poly().is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(Poly::constant(Rational(0)).is_zero());
  CHECK(Poly::monomial(Rational(1, 3), 4).degree() == 4);
  CHECK(Poly::monomial(Rational(0), 4).is_zero());
}

TEST_CASE("eval matches the power-sum definition") {
  Poly f({Rational(1), Rational(2), Rational(3)});
  const Rational ts[] = {Rational(0), Rational(1), Rational(1, 2),
                         Rational(-2, 3), Rational(7, 5)};
  for (const auto& t : ts) {
    Rational direct(0);
    for (std::size_t j = 0; j < f.coeffs().size(); ++j)
      direct += f.coeff(j) * rat_pow(t, j);
    CHECK(eval(f, t) == direct);
  }
  CHECK(eval(f, Rational(1, 2)) == Rational(11, 4));
  CHECK(eval(Poly(), Rational(5)) == Rational(0));
}

TEST_CASE("derivative and antiderivative invert each other") {
  Poly f({Rational(4), Rational(-1), Rational(0), Rational(5, 2)});
  Poly df = derivative(f);
  CHECK(df == Poly({Rational(-1), Rational(0), Rational(15, 2)}));
  CHECK(antiderivative(df) + Poly::constant(f.coeff(0)) == f);
  CHECK(derivative(antiderivative(f)) == f);
  CHECK(antiderivative(f).coeff(0) == Rational(0));
  CHECK(derivative(Poly::constant(Rational(9))).is_zero());
}

TEST_CASE("coefficient norms and the coefficient vector") {
  Poly f({Rational(1), Rational(-7, 2), Rational(3)});
  CHECK(coeff_maxnorm(f) == Rational(7, 2));
  FinSuppVec u = coeff_vector(f);
  CHECK(u.coordinate(1) == Rational(1));
  CHECK(u.coordinate(2) == Rational(-7, 2));
  CHECK(u.coordinate(3) == Rational(3));
  CHECK(u.support_size() == 3);
  CHECK(coeff_vector(Poly()).is_zero());
}

TEST_CASE("str and parse round-trip") {
  Poly f({Rational(1), Rational(2), Rational(3)});
  CHECK(Poly::parse(f.str()) == f);
  CHECK(Poly::parse("1 + 2 t + 3 t^2") == f);
  CHECK(Poly::parse("t^3 - 5") ==
        Poly({Rational(-5), Rational(0), Rational(0), Rational(1)}));
  CHECK(Poly::parse("3*t") == Poly::monomial(Rational(3), 1));
  CHECK(Poly::parse("-t") == Poly::monomial(Rational(-1), 1));
  CHECK(Poly::parse("0").is_zero());
  CHECK(Poly().str() == "0");
  CHECK(Poly::parse("1/2 t^2") == Poly::monomial(Rational(1, 2), 2));

  CHECK(Poly::parse("1 + +2") == Poly::constant(Rational(3)));
  CHECK_THROWS(Poly::parse(""));
  CHECK_THROWS(Poly::parse("t^"));
  CHECK_THROWS(Poly::parse("1 +"));
  CHECK_THROWS(Poly::parse("-"));
}

TEST_CASE("sup enclosure exact fast paths") {
  CHECK(supnorm01_enclosure(Poly(), 8).is_exact());
  CHECK(supnorm01_enclosure(Poly(), 8).lo == Rational(0));

  Enclosure c = supnorm01_enclosure(Poly::constant(Rational(-3)), 8);
  CHECK(c.is_exact());
  CHECK(c.lo == Rational(3));

  Enclosure one_sign = supnorm01_enclosure(
      Poly({Rational(0), Rational(1), Rational(1)}), 8);
  CHECK(one_sign.is_exact());
  CHECK(one_sign.lo == Rational(2));

  Enclosure neg = supnorm01_enclosure(Poly({Rational(-1), Rational(-1)}), 8);
  CHECK(neg.is_exact());
  CHECK(neg.lo == Rational(2));
}

TEST_CASE("sup enclosure settles dyadic interior maxima exactly") {
  Poly hump({Rational(0), Rational(1), Rational(-1)});  // t (1 - t)
  Enclosure e = supnorm01_enclosure(hump, 32);
  CHECK(e.is_exact());
  CHECK(e.lo == Rational(1, 4));

  Poly wiggle({Rational(2, 9), Rational(-1), Rational(1)});  // (t-1/3)(t-2/3)
  Enclosure w = supnorm01_enclosure(wiggle, 32);
  CHECK(w.is_exact());
  CHECK(w.lo == Rational(2, 9));

  Poly ends({Rational(1), Rational(-3), Rational(0), Rational(1)});
  Enclosure b = supnorm01_enclosure(ends, 32);
  CHECK(b.is_exact());
  CHECK(b.lo == Rational(1));
}

TEST_CASE("sup enclosure pins an irrational maximum inside a tight interval") {
  Poly f({Rational(0), Rational(1), Rational(0), Rational(-1)});  // t - t^3
  Enclosure e = supnorm01_enclosure(f, 40);
  // max is 2 sqrt(3) / 9 = 0.3849001794...
  CHECK(e.width() <= Rational(1, 1000000));
  CHECK(e.lo > Rational(3848, 10000));
  CHECK(e.hi < Rational(3850, 10000));
}

namespace {

// sup over a grid never exceeds the certified upper bound, and the certified
// lower bound never exceeds grid max + Lipschitz slack (|f'| <= sum j |a_j|).
void check_sound_against_grid(const Poly& f, unsigned refinement) {
  Enclosure e = supnorm01_enclosure(f, refinement);
  const long steps = 256;
  Rational grid_max(0);
  for (long k = 0; k <= steps; ++k) {
    Rational v = abs(eval(f, Rational(k, steps)));
    if (v > grid_max) grid_max = v;
  }
  Rational lip(0);
  for (std::size_t j = 1; j < f.coeffs().size(); ++j)
    lip += Rational(static_cast<long>(j)) * abs(f.coeff(j));
  CHECK(e.hi >= grid_max);
  CHECK(e.lo <= grid_max + lip / Rational(2 * steps));
  CHECK(e.lo <= e.hi);
  CHECK(e.lo.sign() >= 0);
}

}  // namespace

TEST_CASE("sup enclosure is sound against dense sampling on seeded polynomials") {
  SampleRng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> coeffs;
    std::size_t deg = static_cast<std::size_t>(rng.next(1, 5));
    for (std::size_t j = 0; j <= deg; ++j) coeffs.push_back(rng.small_rational());
    check_sound_against_grid(Poly(coeffs), 24);
  }
}
