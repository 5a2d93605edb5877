#pragma once

// Exact rational scalars. Everything downstream (vectors, polynomials,
// certificates) computes in this field; no floating point anywhere.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace normcert {

// Invariant: canonical form at all times (gcd(num, den) = 1, den >= 1,
// zero is 0/1). GMP's mpq canonical form is exactly this; the wrapper
// exists so the rest of the code never touches raw mpq state.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}                       // NOLINT: implicit by design
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpz_class& n) : q_(n) {}

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend Rational abs(const Rational& a);

  // Canonical text form: reduced, sign on the numerator, "n/d" or plain "n"
  // when the denominator is 1. parse() accepts that form plus decimal
  // strings ("3.25", "-0.5e-3").
  std::string str() const;
  static Rational parse(const std::string& text);

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// x^k by repeated squaring on num/den; rat_pow(x, 0) = 1 (also for x = 0).
Rational rat_pow(const Rational& x, unsigned long k);

// Finite exponent p >= 1 or infinity (sup norm marker).
class Exponent {
public:
  static Exponent finite(unsigned long p);
  static Exponent infinity() { return Exponent(0, true); }

  bool is_infinity() const { return inf_; }
  unsigned long p() const;  // throws if infinity

  friend bool operator==(const Exponent&, const Exponent&) = default;

  std::string str() const;
  static Exponent parse(const std::string& text);  // "1", "2", ... or "inf"

private:
  Exponent(unsigned long p, bool inf) : p_(p), inf_(inf) {}
  unsigned long p_;
  bool inf_;
};

// Closed interval [lo, hi] certifying an exact value it contains.
struct Enclosure {
  Rational lo;
  Rational hi;

  Enclosure(Rational l, Rational h);
  static Enclosure exact(const Rational& v) { return Enclosure(v, v); }

  Rational width() const { return hi - lo; }
  bool is_exact() const { return lo == hi; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

// Certified enclosure of x^(1/p): lo^p <= x <= hi^p, hi - lo <= width,
// lo, hi >= 0. Collapses to a point when x is a perfect p-th power.
// Requires x >= 0, p >= 1, width > 0.
Enclosure root_enclosure(const Rational& x, unsigned long p, const Rational& width);

}  // namespace normcert
