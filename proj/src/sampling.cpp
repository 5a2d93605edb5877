#include "normcert/sampling.hpp"

#include <stdexcept>

namespace normcert {

std::uint64_t SampleRng::next(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("SampleRng: empty range");
  return lo + eng_() % (hi - lo + 1);
}

long SampleRng::next_long(long lo, long hi) {
  return lo + static_cast<long>(next(0, static_cast<std::uint64_t>(hi - lo)));
}

Rational SampleRng::small_rational() {
  long num = next_long(-9, 9);
  if (num == 0) num = 1;
  long den = next_long(1, 9);
  return Rational(num, den);
}

FinSuppVec SampleRng::vec(std::size_t max_support, Index max_index) {
  std::size_t size = next(0, max_support);
  FinSuppVec u;
  for (std::size_t i = 0; i < size; ++i)
    u.set(next(1, max_index), small_rational());
  return u;
}

FinSuppVec SampleRng::nonzero_vec(std::size_t max_support, Index max_index) {
  for (;;) {
    FinSuppVec u = vec(max_support, max_index);
    if (!u.is_zero()) return u;
  }
}

}  // namespace normcert
