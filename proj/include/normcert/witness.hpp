#pragma once

// Witness sequences and the checks that turn inequality claims about them
// into certificates. Every row is an exact comparison; sup-norm enclosures
// only enter through polynomial claims.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "normcert/certificate.hpp"
#include "normcert/normspec.hpp"

namespace normcert {

struct SeqGen {
  std::function<Element(std::uint64_t)> gen;  // defined for n >= 1
  std::string description;
  // Stabilized coordinate rule c(m) = lim_n coordinate(gen(n), m), set by
  // the generators whose point is escaping supports; required by check_escape.
  std::function<Rational(Index)> limit_coeff;
};

SeqGen gen_thm13();                       // u_n = chi(n)
SeqGen gen_cor22();                       // v_n = sum_{k<=n} 2^-k chi_k
SeqGen gen_lemma41(unsigned long p);      // coefficients m^(-2/p); p in {1, 2}
SeqGen gen_lemma41_geo(unsigned long p);  // coefficients 2^-m; any p >= 1
SeqGen gen_example_derivative();          // f_n = t^n / n

// ||s(n)||_B >= L(n) * ||s(n)||_A for 1 <= n <= N, n not in exclude.
Certificate check_ratio_divergence(const SeqGen& s, const NormSpec& norm_a,
                                   const NormSpec& norm_b,
                                   const std::function<Rational(std::uint64_t)>& L,
                                   std::uint64_t N, const std::set<std::uint64_t>& exclude,
                                   unsigned refinement = 32);

// ||s(n) - s(m)|| <= modulus(m) for all m < n <= N.
Certificate check_cauchy(const SeqGen& s, const NormSpec& spec,
                         const std::function<Rational(std::uint64_t)>& modulus,
                         std::uint64_t N, unsigned refinement = 32);

// ||s(n) - s(n-1)|| > gap for 2 <= n <= N.
Certificate check_not_cauchy(const SeqGen& s, const NormSpec& spec,
                             const Rational& gap, std::uint64_t N,
                             unsigned refinement = 32);

// ||chi_k - chi_j||_p^p = 2 for all distinct pairs; indices must be distinct.
Certificate check_separation(const std::vector<Index>& indices, unsigned long p);

// Coordinates of s stabilize up to N and some stabilized index outside S is
// nonzero. Requires s.limit_coeff and S a subset of {1, ..., N-1}.
Certificate check_escape(const SeqGen& s, const std::set<Index>& S, std::uint64_t N);

}  // namespace normcert
