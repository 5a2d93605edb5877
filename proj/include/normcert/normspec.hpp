#pragma once

// Norm descriptions and the exact comparison machinery behind every
// certificate row. A finite p-norm is carried around as its exact p-th
// power; sup norms are exact; the polynomial sup norm on [0,1] is a
// certified enclosure. Comparisons cross-multiply at a common power, so
// they never leave the rationals.

#include <compare>
#include <variant>
#include <vector>

#include "normcert/operators.hpp"

namespace normcert {

using Element = std::variant<FinSuppVec, Poly>;

class NormSpec {
public:
  enum class Base {
    PNorm,  // coefficient p-norm (Exponent::infinity() = sup of coefficients)
    Sup01,  // max_{t in [0,1]} |f(t)|, polynomials only
  };

  static NormSpec pnorm(Exponent p);
  static NormSpec sup01();
  static NormSpec induced(LinearMap T, NormSpec inner);

  Base base() const { return base_; }
  const Exponent& exponent() const { return p_; }  // PNorm only
  const std::vector<LinearMap>& chain() const { return chain_; }

  std::string str() const;

private:
  NormSpec(Base b, Exponent p) : base_(b), p_(p) {}
  Base base_;
  Exponent p_;
  std::vector<LinearMap> chain_;  // applied front to back before the base norm
};

// Enclosure of norm(u)^power. power = 1 for sup norms, p for finite p-norms;
// exact (lo = hi) everywhere except the subdivision-bounded Sup01 case.
struct NormValue {
  Enclosure pow_enc;
  unsigned long power;

  bool is_exact() const { return pow_enc.is_exact(); }
};

NormValue norm_value(const FinSuppVec& u, const NormSpec& spec, unsigned refinement);
NormValue norm_value(const Poly& f, const NormSpec& spec, unsigned refinement);
NormValue norm_value(const Element& e, const NormSpec& spec, unsigned refinement);

// Exact order of ||u|| vs ||v|| under one spec (same power on both sides).
std::strong_ordering norm_cmp(const FinSuppVec& u, const FinSuppVec& v,
                              const NormSpec& spec);

enum class Cmp { Less, Equal, Greater, Undecided };

// Order of scale_l * norm_l vs scale_r * norm_r. Exact whenever both sides
// are exact (cross-raised to lcm of the powers); enclosure intervals that
// stay overlapping and are not pointwise equal come back Undecided.
// Scales must be >= 0.
Cmp cmp_scaled_norms(const Rational& scale_l, const NormValue& l,
                     const Rational& scale_r, const NormValue& r);

// (scale * norm)^common as an interval; common must be a multiple of v.power.
Enclosure lift_to_power(const Rational& scale, const NormValue& v,
                        unsigned long common);

}  // namespace normcert
