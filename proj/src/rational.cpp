#include "normcert/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace normcert {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(n);
  q_ /= mpq_class(d);
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& a) {
  Rational r;
  r.q_ = abs(a.q_);
  return r;
}

std::string Rational::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_number(const std::string& text) {
  throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// [sign] digits [. digits] [e [sign] digits]
Rational parse_decimal(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  long exp10 = 0;
  size_t epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string es = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = es[0] == '-';
      es = es.substr(1);
    }
    if (!all_digits(es) || es.size() > 6) bad_number(text);
    exp10 = std::stol(es);
    if (eneg) exp10 = -exp10;
  }
  std::string intpart = s, fracpart;
  size_t dot = s.find('.');
  if (dot != std::string::npos) {
    intpart = s.substr(0, dot);
    fracpart = s.substr(dot + 1);
  }
  if (intpart.empty() && fracpart.empty()) bad_number(text);
  if (!intpart.empty() && !all_digits(intpart)) bad_number(text);
  if (!fracpart.empty() && !all_digits(fracpart)) bad_number(text);

  mpz_class digits(intpart.empty() ? "0" : intpart);
  for (char c : fracpart) {
    digits *= 10;
    digits += c - '0';
  }
  exp10 -= static_cast<long>(fracpart.size());

  mpz_class num = digits, den = 1, ten = 10, scale;
  if (exp10 >= 0) {
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(exp10));
    num *= scale;
  } else {
    mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-exp10));
  }
  if (neg) num = -num;
  return Rational(num, den);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) bad_number(text);
  size_t slash = s.find('/');
  if (slash != std::string::npos) {
    std::string ns = strip(s.substr(0, slash));
    std::string ds = strip(s.substr(slash + 1));
    if (ns.empty() || ds.empty()) bad_number(text);
    std::string nd = (ns[0] == '+' || ns[0] == '-') ? ns.substr(1) : ns;
    std::string dd = (ds[0] == '+' || ds[0] == '-') ? ds.substr(1) : ds;
    if (!all_digits(nd) || !all_digits(dd)) bad_number(text);
    mpz_class num(ns), den(ds);
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(num, den);
  }
  return parse_decimal(s);
}

Rational rat_pow(const Rational& x, unsigned long k) {
  if (k == 0) return Rational(1);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), k);
  return Rational(n, d);
}

Exponent Exponent::finite(unsigned long p) {
  if (p < 1) throw std::invalid_argument("Exponent: p must be >= 1");
  return Exponent(p, false);
}

unsigned long Exponent::p() const {
  if (inf_) throw std::logic_error("Exponent: infinity has no finite value");
  return p_;
}

std::string Exponent::str() const { return inf_ ? "inf" : std::to_string(p_); }

Exponent Exponent::parse(const std::string& text) {
  std::string s = strip(text);
  if (s == "inf" || s == "infinity" || s == "oo") return infinity();
  if (!all_digits(s) || s.size() > 9)
    throw std::invalid_argument("Exponent: cannot parse \"" + text + "\"");
  return finite(std::stoul(s));
}

Enclosure::Enclosure(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("Enclosure: lo > hi");
}

Enclosure root_enclosure(const Rational& x, unsigned long p,
                         const Rational& width) {
  if (x.sign() < 0) throw std::domain_error("root_enclosure: negative radicand");
  if (p < 1) throw std::invalid_argument("root_enclosure: p must be >= 1");
  if (width.sign() <= 0) throw std::invalid_argument("root_enclosure: width must be > 0");
  if (x.is_zero()) return Enclosure::exact(Rational(0));
  if (p == 1) return Enclosure::exact(x);

  // Perfect p-th power: both num and den of the reduced form are.
  mpz_class rn, rd;
  bool en = mpz_root(rn.get_mpz_t(), x.num().get_mpz_t(), p) != 0;
  bool ed = mpz_root(rd.get_mpz_t(), x.den().get_mpz_t(), p) != 0;
  if (en && ed) return Enclosure::exact(Rational(rn, rd));

  // Dyadic enclosure at scale 2^-k with 2^-k <= width:
  // s = floor((x * 2^(k p))^(1/p)) gives (s/2^k)^p <= x < ((s+1)/2^k)^p.
  unsigned long k = 0;
  {
    mpz_class pow2 = 1;
    while (pow2 * width.num() < width.den()) {
      pow2 <<= 1;
      ++k;
    }
  }
  mpz_class scaled = x.num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), k * p);
  scaled /= x.den();  // floor; x > 0
  mpz_class s;
  mpz_root(s.get_mpz_t(), scaled.get_mpz_t(), p);
  mpz_class unit = 1;
  mpz_mul_2exp(unit.get_mpz_t(), unit.get_mpz_t(), k);
  return Enclosure(Rational(s, unit), Rational(s + 1, unit));
}

}  // namespace normcert
