#include "normcert/finsupp.hpp"

#include <sstream>
#include <stdexcept>

namespace normcert {

FinSuppVec FinSuppVec::chi(Index k) {
  if (k < 1) throw std::invalid_argument("chi: index must be >= 1");
  FinSuppVec u;
  u.entries_.emplace(k, Rational(1));
  return u;
}

Rational FinSuppVec::coordinate(Index k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? Rational(0) : it->second;
}

void FinSuppVec::set(Index k, const Rational& v) {
  if (k < 1) throw std::invalid_argument("FinSuppVec: index must be >= 1");
  if (v.is_zero())
    entries_.erase(k);
  else
    entries_[k] = v;
}

FinSuppVec operator+(const FinSuppVec& a, const FinSuppVec& b) {
  FinSuppVec r = a;
  for (const auto& [k, v] : b.entries_) {
    auto it = r.entries_.find(k);
    if (it == r.entries_.end()) {
      r.entries_.emplace(k, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) r.entries_.erase(it);
    }
  }
  return r;
}

FinSuppVec FinSuppVec::operator-() const {
  FinSuppVec r;
  for (const auto& [k, v] : entries_) r.entries_.emplace(k, -v);
  return r;
}

FinSuppVec operator-(const FinSuppVec& a, const FinSuppVec& b) { return a + (-b); }

FinSuppVec operator*(const Rational& c, const FinSuppVec& u) {
  FinSuppVec r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : u.entries_) r.entries_.emplace(k, c * v);
  return r;
}

std::string FinSuppVec::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : entries_) {
    if (!first) os << ", ";
    os << k << ":" << v.str();
    first = false;
  }
  return os.str();
}

FinSuppVec FinSuppVec::parse(const std::string& text) {
  FinSuppVec u;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    std::size_t b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;  // tolerate blanks
    std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("FinSuppVec: missing ':' in \"" + item + "\"");
    std::string ks = item.substr(0, colon);
    {
      std::size_t kb = ks.find_first_not_of(" \t");
      std::size_t ke = ks.find_last_not_of(" \t");
      ks = kb == std::string::npos ? "" : ks.substr(kb, ke - kb + 1);
    }
    if (ks.empty() || ks.size() > 18 ||
        ks.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("FinSuppVec: bad index in \"" + item + "\"");
    Index k = std::stoull(ks);
    Rational v = Rational::parse(item.substr(colon + 1));
    if (u.entries_.count(k))
      throw std::invalid_argument("FinSuppVec: duplicate index " + std::to_string(k));
    u.set(k, v);
  }
  return u;
}

FinSuppVec chi(Index k) { return FinSuppVec::chi(k); }
FinSuppVec add(const FinSuppVec& a, const FinSuppVec& b) { return a + b; }
FinSuppVec scale(const Rational& c, const FinSuppVec& u) { return c * u; }
Rational coordinate(const FinSuppVec& u, Index k) { return u.coordinate(k); }

Rational pnorm_pow(const FinSuppVec& u, unsigned long p) {
  if (p < 1) throw std::invalid_argument("pnorm_pow: p must be >= 1");
  Rational acc(0);
  for (const auto& [k, v] : u.entries()) acc += rat_pow(abs(v), p);
  return acc;
}

Rational supnorm(const FinSuppVec& u) {
  Rational best(0);
  for (const auto& [k, v] : u.entries()) {
    Rational a = abs(v);
    if (a > best) best = a;
  }
  return best;
}

}  // namespace normcert
