#pragma once

// Norm-axiom and inner-product certificates. Finite p-norm comparisons stay
// at the exact p-th-power level; genuine root comparisons (the triangle
// inequality for p >= 2) go through shrinking certified enclosures with a
// symbolic shortcut for the exact-equality cases enclosures cannot decide.

#include <cstdint>
#include <functional>
#include <vector>

#include "normcert/certificate.hpp"
#include "normcert/normspec.hpp"

namespace normcert {

using BoundFamily = std::function<Rational(Index)>;

struct AxiomSample {
  FinSuppVec u;
  FinSuppVec v;
  Rational lambda;
};

// Definiteness, absolute homogeneity, and the triangle inequality for every
// sample. Rows that enclosures cannot separate at tolerance_width and the
// shortcut cannot settle come back Undecided and degrade the verdict.
Certificate check_norm_axioms(const NormSpec& spec,
                              const std::vector<AxiomSample>& samples,
                              const Rational& tolerance_width);

// ||w+z||^2 + ||w-z||^2 = 2(||w||^2 + ||z||^2). Exact for p in {1, 2} and
// sup norms; other finite p goes through enclosures (equality there is
// Undecided by nature).
Certificate check_parallelogram(const NormSpec& spec,
                                const std::vector<std::pair<FinSuppVec, FinSuppVec>>& pairs);

// <u,v> = sum_k (Tu)(k)(Tv)(k): symmetry, linearity in the first slot,
// positivity, and <u,u> = ||Tu||_2^2.
Certificate check_inner_consistency(const LinearMap& T,
                                    const std::vector<AxiomSample>& samples);

// |coordinate(u, k)| <= M(k) * ||u|| for every sample and every listed k.
Certificate check_coordinate_bounds(const NormSpec& spec, const BoundFamily& M,
                                    const std::vector<FinSuppVec>& samples,
                                    const std::vector<Index>& indices);

// j-th coordinate of sum_{k<=n} 2^-k chi_k: 2^-j for j <= n, else 0.
Rational thm43_series_coord(Index j, std::uint64_t n);

}  // namespace normcert
