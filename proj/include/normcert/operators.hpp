#pragma once

// Linear maps on the sequence and polynomial spaces, the functionals that
// drive the rank-one constructions, and the norms they induce. Maps are
// immutable closures over pure rules.

#include <functional>
#include <string>
#include <vector>

#include "normcert/finsupp.hpp"
#include "normcert/poly.hpp"
#include "normcert/rational.hpp"

namespace normcert {

// Linear functional, evaluated as phi(u) = sum_k u(k) * phi(chi_k).
// Either an explicit finite table of basis values or a closed-form growth
// rule g with phi(chi_k) = g(k) (chi_k has 1-norm 1).
class Functional {
public:
  static Functional explicit_finite(std::map<Index, Rational> basis_values);
  static Functional growth_rule(std::function<Rational(Index)> g, std::string name);
  static Functional zero();

  Rational basis_value(Index k) const { return coeff_(k); }
  Rational operator()(const FinSuppVec& u) const;

  const std::string& name() const { return name_; }

private:
  Functional(std::function<Rational(Index)> c, std::string n)
      : coeff_(std::move(c)), name_(std::move(n)) {}
  std::function<Rational(Index)> coeff_;
  std::string name_;
};

// Thrown when an induced norm is evaluated on a nonzero vector the map
// kills; the axiom checker instead records the failure in a certificate.
class non_definite_error : public std::domain_error {
public:
  explicit non_definite_error(const std::string& what) : std::domain_error(what) {}
};

class LinearMap {
public:
  enum class Kind {
    Identity,
    BasisImage,       // u |-> sum u(k) rule(k)
    RankOnePerturb,   // u |-> u - phi(u) pivot
    Derivative,       // polynomials
    Antiderivative,   // polynomials, F(0) = 0
    Compose,
  };

  static LinearMap identity();
  static LinearMap basis_image(std::function<FinSuppVec(Index)> rule, std::string name);
  static LinearMap rank_one_perturb(Functional phi, FinSuppVec pivot, std::string name);
  static LinearMap deriv();
  static LinearMap antideriv();
  // stages[0] runs first, stages.back() last
  static LinearMap compose(std::vector<LinearMap> stages);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  FinSuppVec operator()(const FinSuppVec& u) const;
  Poly operator()(const Poly& f) const;

private:
  friend LinearMap thm11_iso(std::function<Index(Index)> relabel, std::string name);
  explicit LinearMap(Kind k) : kind_(k) {}
  Kind kind_;
  std::string name_;
  std::function<FinSuppVec(Index)> rule_;    // BasisImage
  std::function<Index(Index)> relabel_;      // BasisImage via thm11_iso only
  Functional phi_ = Functional::zero();      // RankOnePerturb
  FinSuppVec pivot_;                         // RankOnePerturb
  std::vector<LinearMap> stages_;            // Compose
};

FinSuppVec apply(const LinearMap& T, const FinSuppVec& u);
Poly apply(const LinearMap& T, const Poly& f);

// The rank-one perturbation u |-> u - phi(u) chi_pivot with
// phi(chi_n) = growth(n). With growth(n) = n and pivot = 2 (the defaults
// used throughout) phi(chi_pivot) = 2 and the map is an involution.
LinearMap thm13_map(std::function<Rational(Index)> growth, Index pivot,
                    std::string growth_name);
LinearMap thm13_default();  // growth(n) = n, pivot = 2

// True iff T(T(u)) == u for every sample.
bool check_involution(const LinearMap& T, const std::vector<FinSuppVec>& samples);

// Norms pulled back along T. Evaluating on a nonzero vector with T u = 0
// throws non_definite_error; such a T does not induce a norm.
Rational induced_norm_pow(const LinearMap& T, const FinSuppVec& u, unsigned long p);
Rational induced_supnorm(const LinearMap& T, const FinSuppVec& u);

// <u, v> = sum_k (T u)(k) (T v)(k)
Rational induced_inner(const LinearMap& T, const FinSuppVec& u, const FinSuppVec& v);

// Index relabeling u |-> sum u(k) chi_{relabel(k)}. Applying it throws if
// two exercised indices collide (the relabeling must be injective there).
LinearMap thm11_iso(std::function<Index(Index)> relabel, std::string name);

// Registry strings: "identity", "derivative", "antiderivative", "shift:+7",
// "thm13:g=n:pivot=2", "thm13:g=4^n:pivot=2", "thm13:g=0:pivot=2".
LinearMap parse_map(const std::string& text);

}  // namespace normcert
