#pragma once

// Finitely supported rational sequences: the common domain of every map,
// norm, and witness here. Entries live in an ordered map keyed by index.

#include <cstdint>
#include <map>
#include <string>

#include "normcert/rational.hpp"

namespace normcert {

using Index = std::uint64_t;  // 1-based

// Invariant: no entry stores a zero value, so support() is exactly the set
// of keys and equality is map equality.
class FinSuppVec {
public:
  FinSuppVec() = default;

  static FinSuppVec chi(Index k);  // indicator of {k}; k >= 1

  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const std::map<Index, Rational>& entries() const { return entries_; }

  Rational coordinate(Index k) const;  // 0 off the support

  void set(Index k, const Rational& v);  // erases on v = 0

  friend FinSuppVec operator+(const FinSuppVec& a, const FinSuppVec& b);
  friend FinSuppVec operator-(const FinSuppVec& a, const FinSuppVec& b);
  FinSuppVec operator-() const;
  friend FinSuppVec operator*(const Rational& c, const FinSuppVec& u);

  friend bool operator==(const FinSuppVec&, const FinSuppVec&) = default;

  // "k1:val, k2:val" with support-sorted keys; the zero vector prints "".
  std::string str() const;
  static FinSuppVec parse(const std::string& text);

private:
  std::map<Index, Rational> entries_;
};

FinSuppVec chi(Index k);
FinSuppVec add(const FinSuppVec& a, const FinSuppVec& b);
FinSuppVec scale(const Rational& c, const FinSuppVec& u);
Rational coordinate(const FinSuppVec& u, Index k);

// sum_k |u(k)|^p, the exact p-th power of the p-norm. p >= 1 finite.
Rational pnorm_pow(const FinSuppVec& u, unsigned long p);

// max_k |u(k)| (0 for the zero vector).
Rational supnorm(const FinSuppVec& u);

}  // namespace normcert
