#include "normcert/witness.hpp"

#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace normcert {

namespace {

Element element_sub(const Element& a, const Element& b) {
  if (a.index() != b.index())
    throw std::invalid_argument("sequence mixes vectors and polynomials");
  if (std::holds_alternative<FinSuppVec>(a))
    return std::get<FinSuppVec>(a) - std::get<FinSuppVec>(b);
  return std::get<Poly>(a) - std::get<Poly>(b);
}

// Incremental partial sums sum_{m<=n} c(m) chi_m, memoized.
SeqGen partial_sum_gen(std::function<Rational(Index)> c, std::string description) {
  auto cache = std::make_shared<std::vector<FinSuppVec>>();
  cache->push_back(FinSuppVec{});  // n = 0
  auto coeff = c;
  SeqGen s;
  s.gen = [cache, coeff](std::uint64_t n) -> Element {
    if (n < 1) throw std::invalid_argument("SeqGen: n must be >= 1");
    while (cache->size() <= n) {
      Index m = static_cast<Index>(cache->size());
      FinSuppVec next = cache->back();
      next.set(m, coeff(m));
      cache->push_back(std::move(next));
    }
    return (*cache)[n];
  };
  s.description = std::move(description);
  s.limit_coeff = std::move(c);
  return s;
}

std::string enclosure_note(unsigned long common) {
  return "values raised to power " + std::to_string(common);
}

}  // namespace

SeqGen gen_thm13() {
  SeqGen s;
  s.gen = [](std::uint64_t n) -> Element {
    if (n < 1) throw std::invalid_argument("SeqGen: n must be >= 1");
    return chi(static_cast<Index>(n));
  };
  s.description = "u_n = chi(n)";
  return s;
}

SeqGen gen_cor22() {
  return partial_sum_gen(
      [](Index k) {
        return Rational(mpz_class(1), mpz_class(1) << static_cast<unsigned>(k));
      },
      "v_n = sum_{k<=n} 2^-k chi_k");
}

SeqGen gen_lemma41(unsigned long p) {
  if (p != 1 && p != 2)
    throw std::invalid_argument(
        "gen_lemma41: coefficient m^(-2/p) is rational only for p in {1, 2}; "
        "use gen_lemma41_geo for other exponents");
  if (p == 1)
    return partial_sum_gen(
        [](Index m) {
          mpz_class mm(static_cast<unsigned long>(m));
          return Rational(mpz_class(1), mm * mm);
        },
        "u_n = sum_{m<=n} m^-2 chi_m");
  return partial_sum_gen(
      [](Index m) {
        return Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(m)));
      },
      "u_n = sum_{m<=n} m^-1 chi_m");
}

SeqGen gen_lemma41_geo(unsigned long p) {
  if (p < 1) throw std::invalid_argument("gen_lemma41_geo: p must be >= 1");
  return partial_sum_gen(
      [](Index m) {
        return Rational(mpz_class(1), mpz_class(1) << static_cast<unsigned>(m));
      },
      "u_n = sum_{m<=n} 2^-m chi_m");
}

SeqGen gen_example_derivative() {
  SeqGen s;
  s.gen = [](std::uint64_t n) -> Element {
    if (n < 1) throw std::invalid_argument("SeqGen: n must be >= 1");
    return Poly::monomial(Rational(1, static_cast<long>(n)),
                          static_cast<std::size_t>(n));
  };
  s.description = "f_n = t^n / n";
  return s;
}

Certificate check_ratio_divergence(const SeqGen& s, const NormSpec& norm_a,
                                   const NormSpec& norm_b,
                                   const std::function<Rational(std::uint64_t)>& L,
                                   std::uint64_t N,
                                   const std::set<std::uint64_t>& exclude,
                                   unsigned refinement) {
  Certificate cert;
  cert.claim_id = "ratio-divergence";
  cert.add_param("sequence", s.description);
  cert.add_param("norm_a", norm_a.str());
  cert.add_param("norm_b", norm_b.str());
  cert.add_param("N", std::to_string(N));
  for (std::uint64_t n = 1; n <= N; ++n) {
    if (exclude.count(n)) continue;
    Element u = s.gen(n);
    NormValue va = norm_value(u, norm_a, refinement);
    NormValue vb = norm_value(u, norm_b, refinement);
    Rational ln = L(n);
    if (ln.sign() < 0)
      throw std::invalid_argument("check_ratio_divergence: L(n) must be >= 0");
    Cmp c = cmp_scaled_norms(Rational(1), vb, ln, va);
    unsigned long common = std::lcm(va.power, vb.power);
    Enclosure lhs = lift_to_power(Rational(1), vb, common);
    Enclosure rhs = lift_to_power(ln, va, common);
    CertRow row;
    row.n = n;
    row.holds = c == Cmp::Greater || c == Cmp::Equal;
    row.undecided = c == Cmp::Undecided;
    // For certified >= rows the recorded pair (lower of lhs, upper of rhs)
    // re-certifies by itself; exact rows record the values.
    row.lhs = (row.holds && !lhs.is_exact()) ? lhs.lo.str() : lhs.hi.str();
    row.rhs = rhs.hi.str();
    if (common != 1) row.note = enclosure_note(common);
    cert.push_row(std::move(row));
  }
  return cert;
}

Certificate check_cauchy(const SeqGen& s, const NormSpec& spec,
                         const std::function<Rational(std::uint64_t)>& modulus,
                         std::uint64_t N, unsigned refinement) {
  Certificate cert;
  cert.claim_id = "cauchy";
  cert.add_param("sequence", s.description);
  cert.add_param("norm", spec.str());
  cert.add_param("N", std::to_string(N));
  NormValue one{Enclosure::exact(Rational(1)), 1};
  for (std::uint64_t m = 1; m < N; ++m) {
    Rational mod = modulus(m);
    if (mod.sign() < 0)
      throw std::invalid_argument("check_cauchy: modulus must be >= 0");
    for (std::uint64_t n = m + 1; n <= N; ++n) {
      Element diff = element_sub(s.gen(n), s.gen(m));
      NormValue v = norm_value(diff, spec, refinement);
      Cmp c = cmp_scaled_norms(Rational(1), v, mod, one);
      unsigned long common = v.power;
      Enclosure lhs = lift_to_power(Rational(1), v, common);
      Rational rhs = rat_pow(mod, common);
      CertRow row;
      row.n = n;
      row.m = m;
      row.holds = c == Cmp::Less || c == Cmp::Equal;
      row.undecided = c == Cmp::Undecided;
      row.lhs = lhs.hi.str();
      row.rhs = rhs.str();
      if (common != 1) row.note = enclosure_note(common);
      cert.push_row(std::move(row));
    }
  }
  return cert;
}

Certificate check_not_cauchy(const SeqGen& s, const NormSpec& spec,
                             const Rational& gap, std::uint64_t N,
                             unsigned refinement) {
  if (gap.sign() < 0)
    throw std::invalid_argument("check_not_cauchy: gap must be >= 0");
  Certificate cert;
  cert.claim_id = "not-cauchy";
  cert.add_param("sequence", s.description);
  cert.add_param("norm", spec.str());
  cert.add_param("gap", gap.str());
  cert.add_param("N", std::to_string(N));
  NormValue one{Enclosure::exact(Rational(1)), 1};
  for (std::uint64_t n = 2; n <= N; ++n) {
    Element diff = element_sub(s.gen(n), s.gen(n - 1));
    NormValue v = norm_value(diff, spec, refinement);
    Cmp c = cmp_scaled_norms(Rational(1), v, gap, one);
    unsigned long common = v.power;
    Enclosure lhs = lift_to_power(Rational(1), v, common);
    CertRow row;
    row.n = n;
    row.holds = c == Cmp::Greater;
    row.undecided = c == Cmp::Undecided;
    row.lhs = (row.holds && !lhs.is_exact()) ? lhs.lo.str() : lhs.hi.str();
    row.rhs = rat_pow(gap, common).str();
    if (common != 1) row.note = enclosure_note(common);
    cert.push_row(std::move(row));
  }
  return cert;
}

Certificate check_separation(const std::vector<Index>& indices, unsigned long p) {
  if (p < 1) throw std::invalid_argument("check_separation: p must be >= 1");
  {
    std::set<Index> uniq(indices.begin(), indices.end());
    if (uniq.size() != indices.size())
      throw std::invalid_argument("check_separation: indices must be distinct");
  }
  Certificate cert;
  cert.claim_id = "separation";
  cert.add_param("p", std::to_string(p));
  cert.add_param("indices", std::to_string(indices.size()));
  const Rational two(2);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      Rational d = pnorm_pow(chi(indices[i]) - chi(indices[j]), p);
      CertRow row;
      row.n = indices[i];
      row.m = indices[j];
      row.lhs = d.str();
      row.rhs = two.str();
      row.holds = d == two;
      if (p != 1) row.note = enclosure_note(p);
      cert.push_row(std::move(row));
    }
  }
  return cert;
}

Certificate check_escape(const SeqGen& s, const std::set<Index>& S, std::uint64_t N) {
  if (!s.limit_coeff)
    throw std::invalid_argument("check_escape: generator has no stabilized "
                                "coordinate rule");
  for (Index k : S)
    if (k < 1 || k >= N)
      throw std::invalid_argument("check_escape: S must be a subset of {1..N-1}");
  Certificate cert;
  cert.claim_id = "escape";
  cert.add_param("sequence", s.description);
  cert.add_param("N", std::to_string(N));
  {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (Index k : S) {
      os << (first ? "" : ", ") << k;
      first = false;
    }
    os << "}";
    cert.add_param("S", os.str());
  }

  // Stabilization: coordinate(s(n), m) stays at c(m) from n = m on.
  for (Index m = 1; m <= N; ++m) {
    Rational limit = s.limit_coeff(m);
    bool stable = true;
    Rational seen = limit;
    for (std::uint64_t n = m; n <= N; ++n) {
      Element un = s.gen(n);
      if (!std::holds_alternative<FinSuppVec>(un))
        throw std::invalid_argument("check_escape: needs a sequence-vector generator");
      Rational c = coordinate(std::get<FinSuppVec>(un), m);
      if (c != limit) {
        stable = false;
        seen = c;
        break;
      }
    }
    CertRow row;
    row.n = m;
    row.lhs = seen.str();
    row.rhs = limit.str();
    row.holds = stable;
    row.note = "stabilized coordinate";
    cert.push_row(std::move(row));
  }

  // Witness outside S: smallest index not in S; its stabilized value was
  // verified above (S is confined to {1..N-1}, so the witness is <= N).
  Index w = 1;
  while (S.count(w)) ++w;
  Rational wv = s.limit_coeff(w);
  cert.add_param("witness_index", std::to_string(w));
  cert.add_param("witness_value", wv.str());
  CertRow row;
  row.n = w;
  row.lhs = wv.str();
  row.rhs = "0";
  row.holds = !wv.is_zero();
  row.note = "witness coordinate outside S is nonzero";
  cert.push_row(std::move(row));
  return cert;
}

}  // namespace normcert
