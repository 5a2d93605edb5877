#pragma once

// Seeded sample generation. Draws go through raw mt19937_64 outputs with
// modulo reduction, not distributions, so identical seeds give identical
// samples on every platform and standard library.

#include <cstdint>
#include <random>
#include <vector>

#include "normcert/finsupp.hpp"

namespace normcert {

class SampleRng {
public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next(std::uint64_t lo, std::uint64_t hi);  // inclusive
  long next_long(long lo, long hi);

  // Nonzero numerator in [-9, 9], denominator in [1, 9].
  Rational small_rational();

  // Support size in [0, max_support], indices in [1, max_index].
  FinSuppVec vec(std::size_t max_support = 6, Index max_index = 30);

  // Like vec() but never the zero vector.
  FinSuppVec nonzero_vec(std::size_t max_support = 6, Index max_index = 30);

private:
  std::mt19937_64 eng_;
};

}  // namespace normcert
