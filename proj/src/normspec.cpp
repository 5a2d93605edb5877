#include "normcert/normspec.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace normcert {

NormSpec NormSpec::pnorm(Exponent p) { return NormSpec(Base::PNorm, p); }

NormSpec NormSpec::sup01() { return NormSpec(Base::Sup01, Exponent::infinity()); }

NormSpec NormSpec::induced(LinearMap T, NormSpec inner) {
  NormSpec s = std::move(inner);
  s.chain_.insert(s.chain_.begin(), std::move(T));
  return s;
}

std::string NormSpec::str() const {
  std::ostringstream os;
  for (const auto& T : chain_) os << "||" << T.name() << " . ";
  switch (base_) {
    case Base::PNorm:
      os << (p_.is_infinity() ? "sup-norm" : "l" + p_.str() + "-norm");
      break;
    case Base::Sup01:
      os << "sup on [0,1]";
      break;
  }
  for (std::size_t i = 0; i < chain_.size(); ++i) os << "||";
  return os.str();
}

namespace {

NormValue base_norm_vec(const FinSuppVec& u, const NormSpec& spec) {
  if (spec.base() != NormSpec::Base::PNorm)
    throw std::invalid_argument("norm_value: " + spec.str() +
                                " needs a polynomial argument");
  if (spec.exponent().is_infinity())
    return NormValue{Enclosure::exact(supnorm(u)), 1};
  unsigned long p = spec.exponent().p();
  return NormValue{Enclosure::exact(pnorm_pow(u, p)), p};
}

NormValue base_norm_poly(const Poly& f, const NormSpec& spec, unsigned refinement) {
  if (spec.base() == NormSpec::Base::Sup01)
    return NormValue{supnorm01_enclosure(f, refinement), 1};
  if (spec.exponent().is_infinity())
    return NormValue{Enclosure::exact(coeff_maxnorm(f)), 1};
  unsigned long p = spec.exponent().p();
  return NormValue{Enclosure::exact(pnorm_pow(coeff_vector(f), p)), p};
}

}  // namespace

NormValue norm_value(const FinSuppVec& u, const NormSpec& spec, unsigned refinement) {
  FinSuppVec img = u;
  for (const auto& T : spec.chain()) img = T(img);
  (void)refinement;
  return base_norm_vec(img, spec);
}

NormValue norm_value(const Poly& f, const NormSpec& spec, unsigned refinement) {
  Poly img = f;
  for (const auto& T : spec.chain()) img = T(img);
  return base_norm_poly(img, spec, refinement);
}

NormValue norm_value(const Element& e, const NormSpec& spec, unsigned refinement) {
  if (std::holds_alternative<FinSuppVec>(e))
    return norm_value(std::get<FinSuppVec>(e), spec, refinement);
  return norm_value(std::get<Poly>(e), spec, refinement);
}

std::strong_ordering norm_cmp(const FinSuppVec& u, const FinSuppVec& v,
                              const NormSpec& spec) {
  NormValue a = norm_value(u, spec, 0);
  NormValue b = norm_value(v, spec, 0);
  // Same spec, same power: powers of nonnegative reals are order-isomorphic.
  return a.pow_enc.lo <=> b.pow_enc.lo;
}

Enclosure lift_to_power(const Rational& scale, const NormValue& v,
                        unsigned long common) {
  if (common % v.power != 0)
    throw std::invalid_argument("lift_to_power: not a multiple of the stored power");
  unsigned long e = common / v.power;
  Rational s = rat_pow(scale, common);
  return Enclosure(s * rat_pow(v.pow_enc.lo, e), s * rat_pow(v.pow_enc.hi, e));
}

Cmp cmp_scaled_norms(const Rational& scale_l, const NormValue& l,
                     const Rational& scale_r, const NormValue& r) {
  if (scale_l.sign() < 0 || scale_r.sign() < 0)
    throw std::invalid_argument("cmp_scaled_norms: scales must be >= 0");
  unsigned long common = std::lcm(l.power, r.power);
  Enclosure a = lift_to_power(scale_l, l, common);
  Enclosure b = lift_to_power(scale_r, r, common);
  if (a.is_exact() && b.is_exact()) {
    auto c = a.lo <=> b.lo;
    return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equal;
  }
  if (a.hi < b.lo) return Cmp::Less;
  if (a.lo > b.hi) return Cmp::Greater;
  return Cmp::Undecided;
}

}  // namespace normcert
