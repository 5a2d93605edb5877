#pragma once

// Rational polynomials on [0,1], dense coefficient form. The sup norm on
// [0,1] is not rational in general, so it is reported as a certified
// enclosure (Bernstein coefficient bounds, dyadic subdivision).

#include <string>
#include <vector>

#include "normcert/finsupp.hpp"
#include "normcert/rational.hpp"

namespace normcert {

// Invariant: coeffs_ carries no trailing zeros; the zero polynomial is the
// empty vector and has degree -1 by convention.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t j) const;

  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  Poly operator-() const;
  friend Poly operator*(const Rational& c, const Poly& f);

  friend bool operator==(const Poly&, const Poly&) = default;

  // "a0 + a1 t + a2 t^2"; zero polynomial prints "0".
  std::string str() const;
  static Poly parse(const std::string& text);

private:
  std::vector<Rational> coeffs_;
};

Rational eval(const Poly& f, const Rational& t);  // Horner
Poly derivative(const Poly& f);
Poly antiderivative(const Poly& f);  // constant term 0

// max_j |a_j|; equals the sup norm of the coefficient vector.
Rational coeff_maxnorm(const Poly& f);

// Coefficient vector as a finitely supported sequence, degree j at index j+1.
FinSuppVec coeff_vector(const Poly& f);

// Certified enclosure of max_{t in [0,1]} |f(t)|. The lower bound is always
// a witnessed evaluation, the upper bound a Bernstein coefficient bound.
// Collapses exactly when f is constant or all coefficients share one sign
// (the max then sits at t = 1). `refinement` bounds the subdivision rounds.
Enclosure supnorm01_enclosure(const Poly& f, unsigned refinement);

}  // namespace normcert
