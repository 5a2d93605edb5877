#include "normcert/axioms.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "normcert/witness.hpp"

namespace normcert {

namespace {

// v = lambda * u with lambda >= 0 (u nonzero), the Minkowski equality case.
std::optional<Rational> nonneg_multiple_of(const FinSuppVec& v, const FinSuppVec& u) {
  if (u.is_zero()) return std::nullopt;
  if (v.is_zero()) return Rational(0);
  if (u.support_size() != v.support_size()) return std::nullopt;
  auto it = u.entries().begin();
  auto jt = v.entries().begin();
  Rational ratio = jt->second / it->second;
  if (ratio.sign() < 0) return std::nullopt;
  for (; it != u.entries().end(); ++it, ++jt) {
    if (it->first != jt->first) return std::nullopt;
    if (jt->second != ratio * it->second) return std::nullopt;
  }
  return ratio;
}

// Apply the norm's map chain; the base exponent stays behind.
FinSuppVec resolve_chain(const FinSuppVec& u, const NormSpec& spec) {
  FinSuppVec img = u;
  for (const auto& T : spec.chain()) img = T(img);
  return img;
}

struct TriangleOutcome {
  bool holds = false;
  bool undecided = false;
  std::string lhs, rhs;
  std::optional<std::string> note;
};

// ||a + b||_p <= ||a||_p + ||b||_p for base vectors a, b (chain already
// applied). Exact for p = 1 and sup; certified enclosures otherwise.
TriangleOutcome triangle_check(const FinSuppVec& a, const FinSuppVec& b,
                               const Exponent& p, const Rational& tolerance_width) {
  TriangleOutcome out;
  if (p.is_infinity()) {
    Rational lhs = supnorm(a + b);
    Rational rhs = supnorm(a) + supnorm(b);
    out.holds = lhs <= rhs;
    out.lhs = lhs.str();
    out.rhs = rhs.str();
    return out;
  }
  unsigned long pp = p.p();
  if (pp == 1) {
    Rational lhs = pnorm_pow(a + b, 1);
    Rational rhs = pnorm_pow(a, 1) + pnorm_pow(b, 1);
    out.holds = lhs <= rhs;
    out.lhs = lhs.str();
    out.rhs = rhs.str();
    return out;
  }

  Rational A = pnorm_pow(a + b, pp);
  Rational B = pnorm_pow(a, pp);
  Rational C = pnorm_pow(b, pp);

  // Exact-equality cases first: a zero summand, or b a nonnegative multiple
  // of a. Enclosures can never separate equal sides, so settle symbolically
  // and record the equality at the p-th-power level.
  std::optional<Rational> mult = nonneg_multiple_of(b, a);
  if (a.is_zero() || b.is_zero() || mult) {
    Rational lam = a.is_zero() ? Rational(0) : mult.value_or(Rational(0));
    Rational expected =
        a.is_zero() ? C : rat_pow(Rational(1) + lam, pp) * B;  // (1+lam)^p ||a||^p
    out.holds = A == expected;
    out.lhs = A.str();
    out.rhs = expected.str();
    out.note = "equality case settled symbolically; p-th powers";
    return out;
  }

  // Shrink widths down to the tolerance; gaps between distinct p-norm values
  // of rational vectors separate long before 10^-30 in practice.
  Rational width(1, 65536);  // 2^-16
  for (;;) {
    Enclosure ea = root_enclosure(A, pp, width);
    Enclosure eb = root_enclosure(B, pp, width);
    Enclosure ec = root_enclosure(C, pp, width);
    Rational rhs_lo = eb.lo + ec.lo;
    Rational rhs_hi = eb.hi + ec.hi;
    if (ea.hi <= rhs_lo) {
      out.holds = true;
      out.lhs = ea.hi.str();
      out.rhs = rhs_lo.str();
      out.note = "certified by enclosures at width " + width.str();
      return out;
    }
    if (ea.lo > rhs_hi) {
      out.holds = false;
      out.lhs = ea.lo.str();
      out.rhs = rhs_hi.str();
      out.note = "violated; certified by enclosures at width " + width.str();
      return out;
    }
    if (width <= tolerance_width) {
      out.undecided = true;
      out.lhs = ea.lo.str() + ".." + ea.hi.str();
      out.rhs = rhs_lo.str() + ".." + rhs_hi.str();
      out.note = "enclosures overlap at width " + width.str();
      return out;
    }
    width *= width;  // 2^-16 -> 2^-32 -> 2^-64 -> 2^-128
    if (width < tolerance_width) width = tolerance_width;
  }
}

}  // namespace

Certificate check_norm_axioms(const NormSpec& spec,
                              const std::vector<AxiomSample>& samples,
                              const Rational& tolerance_width) {
  if (tolerance_width.sign() <= 0)
    throw std::invalid_argument("check_norm_axioms: tolerance_width must be > 0");
  if (spec.base() != NormSpec::Base::PNorm)
    throw std::invalid_argument("check_norm_axioms: sequence-space norms only");
  Certificate cert;
  cert.claim_id = "norm-axioms";
  cert.add_param("norm", spec.str());
  cert.add_param("samples", std::to_string(samples.size()));
  cert.add_param("tolerance_width", tolerance_width.str());
  const Exponent& p = spec.exponent();
  unsigned long power = p.is_infinity() ? 1 : p.p();

  std::uint64_t i = 0;
  for (const auto& smp : samples) {
    ++i;
    FinSuppVec a = resolve_chain(smp.u, spec);
    FinSuppVec b = resolve_chain(smp.v, spec);

    {  // definiteness: ||u|| = 0 exactly for u = 0
      Rational pw = p.is_infinity() ? supnorm(a) : pnorm_pow(a, power);
      CertRow row;
      row.n = i;
      row.lhs = pw.str();
      row.rhs = "0";
      row.holds = smp.u.is_zero() ? pw.is_zero() : pw.sign() > 0;
      row.note = "definiteness";
      cert.push_row(std::move(row));
    }
    {  // homogeneity at the power level: ||lambda u||^p = |lambda|^p ||u||^p
      FinSuppVec la = resolve_chain(smp.lambda * smp.u, spec);
      Rational lhs = p.is_infinity() ? supnorm(la) : pnorm_pow(la, power);
      Rational rhs = rat_pow(abs(smp.lambda), power) *
                     (p.is_infinity() ? supnorm(a) : pnorm_pow(a, power));
      CertRow row;
      row.n = i;
      row.lhs = lhs.str();
      row.rhs = rhs.str();
      row.holds = lhs == rhs;
      row.note = "homogeneity";
      cert.push_row(std::move(row));
    }
    {  // triangle
      TriangleOutcome tri = triangle_check(a, b, p, tolerance_width);
      CertRow row;
      row.n = i;
      row.lhs = tri.lhs;
      row.rhs = tri.rhs;
      row.holds = tri.holds;
      row.undecided = tri.undecided;
      row.note = tri.note ? "triangle: " + *tri.note : "triangle";
      cert.push_row(std::move(row));
    }
  }
  return cert;
}

namespace {

// norm^2 as an interval, exact whenever the exponent allows it.
Enclosure squared_norm(const FinSuppVec& base, const Exponent& p) {
  if (p.is_infinity()) {
    Rational s = supnorm(base);
    return Enclosure::exact(s * s);
  }
  unsigned long pp = p.p();
  if (pp == 2) return Enclosure::exact(pnorm_pow(base, 2));
  if (pp == 1) {
    Rational s = pnorm_pow(base, 1);
    return Enclosure::exact(s * s);
  }
  // norm^2 = (A^2)^(1/p) for A = norm^p
  Rational A = pnorm_pow(base, pp);
  return root_enclosure(A * A, pp, Rational(1, 1000000000L));
}

}  // namespace

Certificate check_parallelogram(
    const NormSpec& spec,
    const std::vector<std::pair<FinSuppVec, FinSuppVec>>& pairs) {
  if (spec.base() != NormSpec::Base::PNorm)
    throw std::invalid_argument("check_parallelogram: sequence-space norms only");
  Certificate cert;
  cert.claim_id = "parallelogram";
  cert.add_param("norm", spec.str());
  cert.add_param("pairs", std::to_string(pairs.size()));
  const Exponent& p = spec.exponent();
  std::uint64_t i = 0;
  for (const auto& [w, z] : pairs) {
    ++i;
    FinSuppVec a = resolve_chain(w, spec);
    FinSuppVec b = resolve_chain(z, spec);
    Enclosure l1 = squared_norm(a + b, p);
    Enclosure l2 = squared_norm(a - b, p);
    Enclosure r1 = squared_norm(a, p);
    Enclosure r2 = squared_norm(b, p);
    Enclosure lhs(l1.lo + l2.lo, l1.hi + l2.hi);
    Enclosure rhs(Rational(2) * (r1.lo + r2.lo), Rational(2) * (r1.hi + r2.hi));
    CertRow row;
    row.n = i;
    if (lhs.is_exact() && rhs.is_exact()) {
      row.holds = lhs.lo == rhs.lo;
      row.lhs = lhs.lo.str();
      row.rhs = rhs.lo.str();
    } else if (lhs.hi < rhs.lo || lhs.lo > rhs.hi) {
      row.holds = false;
      row.lhs = lhs.lo.str() + ".." + lhs.hi.str();
      row.rhs = rhs.lo.str() + ".." + rhs.hi.str();
      row.note = "separated by enclosures";
    } else {
      row.undecided = true;
      row.lhs = lhs.lo.str() + ".." + lhs.hi.str();
      row.rhs = rhs.lo.str() + ".." + rhs.hi.str();
      row.note = "enclosures overlap; equality is not decidable numerically";
    }
    cert.push_row(std::move(row));
  }
  return cert;
}

Certificate check_inner_consistency(const LinearMap& T,
                                    const std::vector<AxiomSample>& samples) {
  Certificate cert;
  cert.claim_id = "inner-consistency";
  cert.add_param("map", T.name());
  cert.add_param("samples", std::to_string(samples.size()));
  std::uint64_t i = 0;
  for (const auto& smp : samples) {
    ++i;
    const FinSuppVec& u = smp.u;
    const FinSuppVec& v = smp.v;
    const Rational& lam = smp.lambda;
    {
      Rational lhs = induced_inner(T, u, v);
      Rational rhs = induced_inner(T, v, u);
      CertRow row;
      row.n = i;
      row.lhs = lhs.str();
      row.rhs = rhs.str();
      row.holds = lhs == rhs;
      row.note = "symmetry";
      cert.push_row(std::move(row));
    }
    {
      Rational lhs = induced_inner(T, add(scale(lam, u), v), v);
      Rational rhs = lam * induced_inner(T, u, v) + induced_inner(T, v, v);
      CertRow row;
      row.n = i;
      row.lhs = lhs.str();
      row.rhs = rhs.str();
      row.holds = lhs == rhs;
      row.note = "linearity in the first slot";
      cert.push_row(std::move(row));
    }
    {
      Rational q = induced_inner(T, u, u);
      bool img_zero = T(u).is_zero();
      CertRow row;
      row.n = i;
      row.lhs = q.str();
      row.rhs = "0";
      row.holds = q.sign() >= 0 && (q.is_zero() == img_zero);
      row.note = "positivity";
      cert.push_row(std::move(row));
    }
    {
      Rational lhs = induced_inner(T, u, u);
      Rational rhs = pnorm_pow(T(u), 2);
      CertRow row;
      row.n = i;
      row.lhs = lhs.str();
      row.rhs = rhs.str();
      row.holds = lhs == rhs;
      row.note = "matches the induced squared 2-norm";
      cert.push_row(std::move(row));
    }
  }
  return cert;
}

Certificate check_coordinate_bounds(const NormSpec& spec, const BoundFamily& M,
                                    const std::vector<FinSuppVec>& samples,
                                    const std::vector<Index>& indices) {
  Certificate cert;
  cert.claim_id = "coordinate-bounds";
  cert.add_param("norm", spec.str());
  cert.add_param("samples", std::to_string(samples.size()));
  std::uint64_t i = 0;
  for (const auto& u : samples) {
    ++i;
    NormValue nv = norm_value(u, spec, 0);
    for (Index k : indices) {
      Rational bound = M(k);
      if (bound.sign() <= 0)
        throw std::invalid_argument("check_coordinate_bounds: M(k) must be > 0");
      NormValue coord{Enclosure::exact(abs(coordinate(u, k))), 1};
      Cmp c = cmp_scaled_norms(Rational(1), coord, bound, nv);
      unsigned long common = nv.power;
      CertRow row;
      row.n = i;
      row.m = k;
      row.lhs = lift_to_power(Rational(1), coord, common).lo.str();
      row.rhs = lift_to_power(bound, nv, common).lo.str();
      row.holds = c == Cmp::Less || c == Cmp::Equal;
      if (common != 1)
        row.note = "values raised to power " + std::to_string(common);
      cert.push_row(std::move(row));
    }
  }
  return cert;
}

Rational thm43_series_coord(Index j, std::uint64_t n) {
  if (j < 1 || n < 1)
    throw std::invalid_argument("thm43_series_coord: indices start at 1");
  SeqGen s = gen_cor22();
  return coordinate(std::get<FinSuppVec>(s.gen(n)), j);
}

}  // namespace normcert
