#include "normcert/demos.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "normcert/axioms.hpp"
#include "normcert/sampling.hpp"
#include "normcert/witness.hpp"

namespace normcert {

namespace {

Rational pow2_inv(std::uint64_t k) {  // 2^-k
  return Rational(mpz_class(1), mpz_class(1) << static_cast<unsigned>(k));
}

Rational pow_of(unsigned long base, std::uint64_t k) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), base, k);
  return Rational(v);
}

std::function<Rational(Index)> growth_4n() {
  return [](Index n) { return pow_of(4, n); };
}

std::vector<FinSuppVec> seeded_vecs(std::uint64_t seed, std::size_t count) {
  SampleRng rng(seed);
  std::vector<FinSuppVec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(rng.vec());
  return out;
}

std::vector<AxiomSample> seeded_triples(std::uint64_t seed, std::size_t count) {
  SampleRng rng(seed);
  std::vector<AxiomSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    AxiomSample s;
    s.u = rng.vec();
    s.v = rng.vec();
    s.lambda = rng.small_rational();
    out.push_back(std::move(s));
  }
  return out;
}

// ---- thm1.3 ------------------------------------------------------------

std::vector<Certificate> demo_thm13(const DemoConfig& cfg) {
  LinearMap T = thm13_default();
  NormSpec base = NormSpec::pnorm(Exponent::finite(1));
  NormSpec induced = NormSpec::induced(T, base);

  Certificate ratio = check_ratio_divergence(
      gen_thm13(), base, induced,
      [](std::uint64_t n) { return Rational(static_cast<long>(n) - 1); },
      cfg.depth, {2}, cfg.refinement);
  ratio.claim_id = "thm1.3/ratio-divergence";
  ratio.add_param("map", T.name());
  ratio.add_param("L", "n - 1");
  ratio.add_param("excluded", "{2} (the pivot row)");

  Certificate invol;
  invol.claim_id = "thm1.3/involution";
  invol.add_param("map", T.name());
  invol.add_param("samples", "100");
  invol.add_param("seed", std::to_string(cfg.seed));
  std::uint64_t i = 0;
  for (const auto& u : seeded_vecs(cfg.seed, 100)) {
    ++i;
    Rational residue = pnorm_pow(apply(T, apply(T, u)) - u, 1);
    CertRow row;
    row.n = i;
    row.lhs = residue.str();
    row.rhs = "0";
    row.holds = residue.is_zero();
    row.note = "||T(T(u)) - u||_1";
    invol.push_row(std::move(row));
  }
  return {std::move(ratio), std::move(invol)};
}

// ---- cor2.2 ------------------------------------------------------------

std::vector<Certificate> demo_cor22(const DemoConfig& cfg) {
  std::uint64_t N = cfg.depth;
  NormSpec l1 = NormSpec::pnorm(Exponent::finite(1));
  LinearMap T2 = thm13_map(growth_4n(), 2, "4^n");
  LinearMap T1 = thm13_map(growth_4n(), 1, "4^n");

  Certificate cauchy =
      check_cauchy(gen_cor22(), l1, [](std::uint64_t m) { return pow2_inv(m); }, N,
                   cfg.refinement);
  cauchy.claim_id = "cor2.2/cauchy-in-l1";
  cauchy.add_param("modulus", "2^-m");

  Certificate gap = check_not_cauchy(gen_cor22(), NormSpec::induced(T2, l1),
                                     Rational(1), N, cfg.refinement);
  gap.claim_id = "cor2.2/gap-in-induced-norm";

  // Closed form for the consecutive gap. The pivot sits at 1, outside every
  // difference v_n - v_{n-1} = 2^-n chi_n (n >= 2), so
  // ||T(v_n - v_{n-1})||_1 = 2^-n (1 + 4^n) = 2^-n + 2^n on the nose.
  Certificate closed;
  closed.claim_id = "cor2.2/gap-closed-form";
  closed.add_param("map", T1.name());
  closed.add_param("claim", "||v_n - v_{n-1}|| = 2^-n + 2^n > 1");
  SeqGen v = gen_cor22();
  for (std::uint64_t n = 2; n <= N; ++n) {
    FinSuppVec diff =
        std::get<FinSuppVec>(v.gen(n)) - std::get<FinSuppVec>(v.gen(n - 1));
    Rational lhs = induced_norm_pow(T1, diff, 1);
    Rational rhs = pow2_inv(n) + pow_of(2, n);
    CertRow row;
    row.n = n;
    row.lhs = lhs.str();
    row.rhs = rhs.str();
    row.holds = lhs == rhs && lhs > Rational(1);
    closed.push_row(std::move(row));
  }

  // The growth condition behind the contrast: ||chi_n||_induced > 2^n.
  Certificate eq4;
  eq4.claim_id = "cor2.2/growth-condition";
  eq4.add_param("map", T2.name());
  eq4.add_param("claim", "||chi_n||_induced > 2^n ||chi_n||_1");
  for (std::uint64_t n = 1; n <= N; ++n) {
    Rational lhs = induced_norm_pow(T2, chi(n), 1);
    Rational rhs = pow_of(2, n) * pnorm_pow(chi(n), 1);
    CertRow row;
    row.n = n;
    row.lhs = lhs.str();
    row.rhs = rhs.str();
    row.holds = lhs > rhs;
    eq4.push_row(std::move(row));
  }
  return {std::move(cauchy), std::move(gap), std::move(closed), std::move(eq4)};
}

// ---- example-derivative --------------------------------------------------

std::vector<Certificate> demo_example_derivative(const DemoConfig& cfg) {
  NormSpec sup = NormSpec::sup01();
  NormSpec dsup = NormSpec::induced(LinearMap::deriv(), NormSpec::sup01());

  Certificate lower = check_ratio_divergence(
      gen_example_derivative(), sup, dsup,
      [](std::uint64_t n) { return Rational(static_cast<long>(n)); }, cfg.depth, {},
      cfg.refinement);
  lower.claim_id = "example-derivative/ratio-lower";
  lower.add_param("claim", "||f_n'||_sup >= n ||f_n||_sup");
  lower.add_param("domain", "polynomials on [0,1]");

  Certificate upper = check_ratio_divergence(
      gen_example_derivative(), dsup, sup,
      [](std::uint64_t n) { return Rational(1, static_cast<long>(n)); }, cfg.depth,
      {}, cfg.refinement);
  upper.claim_id = "example-derivative/ratio-upper";
  upper.add_param("claim", "||f_n||_sup >= (1/n) ||f_n'||_sup");
  upper.add_param("domain", "polynomials on [0,1]");
  return {std::move(lower), std::move(upper)};
}

// ---- lemma4.1a -----------------------------------------------------------

std::vector<Certificate> demo_lemma41a(const DemoConfig& cfg) {
  std::uint64_t N = cfg.depth;
  SeqGen s;
  NormSpec spec = NormSpec::pnorm(cfg.p);
  std::function<Rational(std::uint64_t)> modulus;
  std::string modulus_name;
  if (!cfg.p.is_infinity() && cfg.p.p() == 1) {
    s = gen_lemma41(1);
    modulus = [](std::uint64_t m) { return Rational(1, static_cast<long>(m)); };
    modulus_name = "1/m";
  } else if (!cfg.p.is_infinity() && cfg.p.p() == 2) {
    s = gen_lemma41(2);
    // ||u_n - u_m||_2 <= sqrt(1/m) <= 1/floor(sqrt(m)); rational majorant.
    modulus = [](std::uint64_t m) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), mpz_class(static_cast<unsigned long>(m)).get_mpz_t());
      return Rational(mpz_class(1), r);
    };
    modulus_name = "1/floor(sqrt(m))";
  } else {
    s = gen_lemma41_geo(cfg.p.is_infinity() ? 1 : cfg.p.p());
    modulus = [](std::uint64_t m) { return pow2_inv(m); };
    modulus_name = "2^-m";
  }

  Certificate cauchy = check_cauchy(s, spec, modulus, N, cfg.refinement);
  cauchy.claim_id = "lemma4.1a/cauchy";
  cauchy.add_param("p", cfg.p.str());
  cauchy.add_param("modulus", modulus_name);

  std::set<Index> S;
  for (Index k = 1; k <= std::min<std::uint64_t>(10, N - 1); ++k) S.insert(k);
  Certificate escape = check_escape(s, S, N);
  escape.claim_id = "lemma4.1a/escape";
  return {std::move(cauchy), std::move(escape)};
}

// ---- lemma4.1b -----------------------------------------------------------

std::vector<Certificate> demo_lemma41b(const DemoConfig& cfg) {
  std::vector<Index> indices;
  for (Index k = 1; k <= std::min<std::uint64_t>(50, cfg.depth); ++k)
    indices.push_back(k);
  std::vector<Certificate> out;
  for (unsigned long p : {1ul, 2ul, 3ul}) {
    Certificate c = check_separation(indices, p);
    c.claim_id = "lemma4.1b/separation-p" + std::to_string(p);
    out.push_back(std::move(c));
  }
  return out;
}

// ---- thm4.3 --------------------------------------------------------------

std::vector<Certificate> demo_thm43(const DemoConfig& cfg) {
  std::uint64_t J = std::min<std::uint64_t>(40, cfg.depth);

  Certificate coords;
  coords.claim_id = "thm4.3/series-coordinates";
  coords.add_param("claim", "pi_j(v_n) = 2^-j for j <= n, 0 for j > n");
  coords.add_param("J", std::to_string(J));
  for (std::uint64_t n = 1; n <= J; ++n) {
    for (Index j = 1; j <= J; ++j) {
      Rational got = thm43_series_coord(j, n);
      Rational want = j <= n ? pow2_inv(j) : Rational(0);
      CertRow row;
      row.n = n;
      row.m = j;
      row.lhs = got.str();
      row.rhs = want.str();
      row.holds = got == want;
      coords.push_row(std::move(row));
    }
  }

  // Positive direction of the coordinate bound: with M = 1, every p-norm
  // dominates every coordinate.
  std::vector<FinSuppVec> samples = seeded_vecs(cfg.seed, 50);
  {
    SeqGen v = gen_cor22();
    for (std::uint64_t n = 1; n <= J; ++n)
      samples.push_back(std::get<FinSuppVec>(v.gen(n)));
  }
  std::vector<Index> idx{1, 2, 3, 5, 8};
  Certificate bounded = check_coordinate_bounds(
      NormSpec::pnorm(cfg.p), [](Index) { return Rational(1); }, samples, idx);
  bounded.claim_id = "thm4.3/coordinate-bounds-hold";
  bounded.add_param("M", "1");

  // Negative direction: the thm13-induced 1-norm admits no bound at the
  // pivot coordinate; samples T chi_n keep norm 1 while |pi_2| = n grows.
  LinearMap T = thm13_default();
  std::vector<FinSuppVec> tsamples;
  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(20, cfg.depth); ++n)
    tsamples.push_back(apply(T, chi(n)));
  Certificate unbounded = check_coordinate_bounds(
      NormSpec::induced(T, NormSpec::pnorm(Exponent::finite(1))),
      [](Index) { return Rational(10); }, tsamples, {2});
  unbounded.claim_id = "thm4.3/coordinate-bound-fails";
  unbounded.add_param("M_2", "10");
  unbounded.add_param("samples", "T chi_n, n <= 20");
  unbounded.expect_violation = true;

  return {std::move(coords), std::move(bounded), std::move(unbounded)};
}

// ---- parallelogram ---------------------------------------------------------

std::vector<Certificate> demo_parallelogram(const DemoConfig& cfg) {
  std::vector<std::pair<FinSuppVec, FinSuppVec>> unit{{chi(1), chi(2)}};
  Certificate sup =
      check_parallelogram(NormSpec::pnorm(Exponent::infinity()), unit);
  sup.claim_id = "parallelogram/sup-norm-fails";
  sup.add_param("pair", "(chi(1), chi(2))");
  sup.expect_violation = true;

  SampleRng rng(cfg.seed);
  std::vector<std::pair<FinSuppVec, FinSuppVec>> pairs;
  for (int i = 0; i < 100; ++i) {
    FinSuppVec a = rng.vec(), b = rng.vec();
    pairs.emplace_back(std::move(a), std::move(b));
  }
  Certificate ind = check_parallelogram(
      NormSpec::induced(thm13_default(), NormSpec::pnorm(Exponent::finite(2))),
      pairs);
  ind.claim_id = "parallelogram/induced-l2-holds";
  ind.add_param("seed", std::to_string(cfg.seed));
  return {std::move(sup), std::move(ind)};
}

// ---- axioms ----------------------------------------------------------------

std::vector<Certificate> demo_axioms(const DemoConfig& cfg) {
  std::vector<AxiomSample> triples =
      seeded_triples(cfg.seed, static_cast<std::size_t>(cfg.depth));
  Rational tol = Rational::parse("1e-30");
  std::vector<Certificate> out;
  for (const Exponent& p : {Exponent::finite(1), Exponent::finite(2),
                            Exponent::finite(3), Exponent::infinity()}) {
    Certificate c = check_norm_axioms(NormSpec::pnorm(p), triples, tol);
    c.claim_id = "axioms/pnorm-" + p.str();
    c.add_param("seed", std::to_string(cfg.seed));
    out.push_back(std::move(c));
  }
  Certificate inner = check_inner_consistency(thm13_default(),
                                              seeded_triples(cfg.seed, 50));
  inner.claim_id = "axioms/induced-inner";
  inner.add_param("seed", std::to_string(cfg.seed));
  out.push_back(std::move(inner));
  return out;
}

// ---- thm1.1-isometry -------------------------------------------------------

std::vector<Certificate> demo_thm11(const DemoConfig& cfg) {
  std::vector<std::pair<std::string, LinearMap>> maps;
  maps.emplace_back("shift:+7", parse_map("shift:+7"));
  {
    // Seeded permutation of {1..64}, identity beyond.
    SampleRng rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    auto perm = std::make_shared<std::map<Index, Index>>();
    std::vector<Index> table(64);
    for (Index k = 0; k < 64; ++k) table[k] = k + 1;
    for (std::size_t k = table.size(); k > 1; --k)
      std::swap(table[k - 1], table[rng.next(0, k - 1)]);
    for (Index k = 1; k <= 64; ++k) (*perm)[k] = table[k - 1];
    maps.emplace_back("seeded permutation of {1..64}",
                      thm11_iso(
                          [perm](Index k) {
                            auto it = perm->find(k);
                            return it == perm->end() ? k : it->second;
                          },
                          "perm64"));
  }

  std::vector<FinSuppVec> samples = seeded_vecs(cfg.seed, 100);
  std::vector<Certificate> out;
  for (auto& [label, T] : maps) {
    Certificate c;
    c.claim_id = label == "shift:+7" ? "thm1.1-isometry/shift"
                                     : "thm1.1-isometry/permutation";
    c.add_param("map", label);
    c.add_param("seed", std::to_string(cfg.seed));
    std::uint64_t i = 0;
    for (const auto& u : samples) {
      ++i;
      FinSuppVec img = apply(T, u);
      bool ok = true;
      std::ostringstream lhs, rhs;
      for (unsigned long p : {1ul, 2ul, 3ul}) {
        Rational a = pnorm_pow(img, p), b = pnorm_pow(u, p);
        ok = ok && a == b;
        lhs << (p > 1 ? "|" : "") << a.str();
        rhs << (p > 1 ? "|" : "") << b.str();
      }
      Rational si = supnorm(img), su = supnorm(u);
      ok = ok && si == su;
      lhs << "|" << si.str();
      rhs << "|" << su.str();
      CertRow row;
      row.n = i;
      row.lhs = lhs.str();
      row.rhs = rhs.str();
      row.holds = ok;
      row.note = "p-norm powers for p=1,2,3 and sup";
      c.push_row(std::move(row));
    }
    out.push_back(std::move(c));
  }
  return out;
}

// ---- registry ----------------------------------------------------------------

struct DemoEntry {
  std::string id;
  std::string description;
  std::function<std::vector<Certificate>(const DemoConfig&)> run;
};

const std::vector<DemoEntry>& registry() {
  static const std::vector<DemoEntry> entries = {
      {"thm1.3",
       "proof of Theorem 1.3: rank-one involution whose induced norm outruns "
       "the 1-norm",
       demo_thm13},
      {"cor2.2",
       "proof of Corollary 2.2: Cauchy in the 1-norm, unit gaps in the "
       "induced norm",
       demo_cor22},
      {"example-derivative",
       "differentiation example: ||f_n'|| / ||f_n|| = n for f_n = t^n / n on "
       "[0,1]",
       demo_example_derivative},
      {"lemma4.1a",
       "proof of Lemma 4.1(a): a Cauchy sequence whose coordinates escape "
       "every finite index set",
       demo_lemma41a},
      {"lemma4.1b",
       "proof of Lemma 4.1(b): ||chi_k - chi_j||_p^p = 2 keeps distinct "
       "indicators apart",
       demo_lemma41b},
      {"thm4.3",
       "proof of Theorem 4.3: coordinate functionals, bounded and unbounded "
       "directions",
       demo_thm43},
      {"parallelogram",
       "Corollary 3.5 computation: sup norm breaks the parallelogram law, the "
       "induced 2-norm keeps it",
       demo_parallelogram},
      {"axioms",
       "norm axioms for p = 1, 2, 3, sup on seeded samples; induced inner "
       "product consistency",
       demo_axioms},
      {"thm1.1-isometry",
       "proof of Theorem 1.1: index relabelings preserve every p-norm and the "
       "sup norm",
       demo_thm11},
  };
  return entries;
}

std::string render(const std::vector<Certificate>& certs, const DemoConfig& cfg) {
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    nlohmann::ordered_json demos = nlohmann::ordered_json::array();
    for (const auto& c : certs)
      demos.push_back(nlohmann::ordered_json::parse(to_json(c)));
    j["demos"] = std::move(demos);
    nlohmann::ordered_json conf;
    conf["demo"] = cfg.all ? "all" : cfg.demo;
    conf["depth"] = cfg.depth;
    conf["p"] = cfg.p.str();
    conf["refinement"] = cfg.refinement;
    conf["seed"] = cfg.seed;
    j["config"] = std::move(conf);
    return j.dump(2) + "\n";
  }
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "claim_id,n,m,lhs,rhs,holds,note\n";
    for (const auto& c : certs) {
      std::string one = to_csv(c);
      os << one.substr(one.find('\n') + 1);  // drop the per-cert header
    }
    return os.str();
  }
  std::ostringstream os;
  for (const auto& c : certs) os << to_text(c);
  return os.str();
}

}  // namespace

std::vector<std::pair<std::string, std::string>> list_demos() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : registry()) out.emplace_back(e.id, e.description);
  return out;
}

bool is_demo(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return true;
  return false;
}

DemoResult run_demo(const DemoConfig& cfg) {
  DemoResult result;
  if (cfg.depth < 2 || (cfg.format != "text" && cfg.format != "json" &&
                        cfg.format != "csv")) {
    result.exit_code = 2;
    return result;
  }
  std::vector<const DemoEntry*> picked;
  if (cfg.all) {
    for (const auto& e : registry()) picked.push_back(&e);
  } else {
    for (const auto& e : registry())
      if (e.id == cfg.demo) picked.push_back(&e);
    if (picked.empty()) {
      result.exit_code = 2;
      return result;
    }
  }
  for (const auto* e : picked) {
    std::vector<Certificate> certs = e->run(cfg);
    for (auto& c : certs) result.certificates.push_back(std::move(c));
  }
  for (const auto& c : result.certificates)
    if (!c.as_expected()) result.exit_code = 1;
  result.rendered = render(result.certificates, cfg);
  return result;
}

}  // namespace normcert
