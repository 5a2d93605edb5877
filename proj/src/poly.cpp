#include "normcert/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace normcert {

namespace {

void trim_trailing_zeros(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim_trailing_zeros(coeffs_);
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Poly(std::move(v));
}

Rational Poly::coeff(std::size_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : Rational(0);
}

Poly operator+(const Poly& f, const Poly& g) {
  std::vector<Rational> c(std::max(f.coeffs_.size(), g.coeffs_.size()), Rational(0));
  for (std::size_t j = 0; j < f.coeffs_.size(); ++j) c[j] += f.coeffs_[j];
  for (std::size_t j = 0; j < g.coeffs_.size(); ++j) c[j] += g.coeffs_[j];
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  std::vector<Rational> c;
  c.reserve(coeffs_.size());
  for (const auto& a : coeffs_) c.push_back(-a);
  return Poly(std::move(c));
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator*(const Rational& c, const Poly& f) {
  if (c.is_zero()) return Poly();
  std::vector<Rational> r;
  r.reserve(f.coeffs_.size());
  for (const auto& a : f.coeffs_) r.push_back(c * a);
  return Poly(std::move(r));
}

Rational eval(const Poly& f, const Rational& t) {
  Rational acc(0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

Poly derivative(const Poly& f) {
  if (f.coeffs().size() <= 1) return Poly();
  std::vector<Rational> c;
  c.reserve(f.coeffs().size() - 1);
  for (std::size_t j = 1; j < f.coeffs().size(); ++j)
    c.push_back(Rational(static_cast<long>(j)) * f.coeffs()[j]);
  return Poly(std::move(c));
}

Poly antiderivative(const Poly& f) {
  if (f.is_zero()) return Poly();
  std::vector<Rational> c(f.coeffs().size() + 1, Rational(0));
  for (std::size_t j = 0; j < f.coeffs().size(); ++j)
    c[j + 1] = f.coeffs()[j] / Rational(static_cast<long>(j + 1));
  return Poly(std::move(c));
}

Rational coeff_maxnorm(const Poly& f) {
  Rational best(0);
  for (const auto& a : f.coeffs()) {
    Rational m = abs(a);
    if (m > best) best = m;
  }
  return best;
}

FinSuppVec coeff_vector(const Poly& f) {
  FinSuppVec u;
  for (std::size_t j = 0; j < f.coeffs().size(); ++j)
    u.set(static_cast<Index>(j) + 1, f.coeffs()[j]);
  return u;
}

namespace {

Rational max_abs(const std::vector<Rational>& b) {
  Rational best(0);
  for (const auto& v : b) {
    Rational m = abs(v);
    if (m > best) best = m;
  }
  return best;
}

// Power-basis coefficients -> Bernstein coefficients on [0,1]:
// b_i = sum_{j<=i} (C(i,j)/C(d,j)) a_j.
std::vector<Rational> bernstein_from_power(const std::vector<Rational>& a) {
  std::size_t d = a.size() - 1;
  std::vector<Rational> b(d + 1, Rational(0));
  for (std::size_t i = 0; i <= d; ++i) {
    // C(i,j)/C(d,j) built incrementally over j.
    Rational w(1);
    for (std::size_t j = 0; j <= i; ++j) {
      if (j > 0)
        w *= Rational(static_cast<long>(i - j + 1), static_cast<long>(d - j + 1));
      b[i] += w * a[j];
    }
  }
  return b;
}

// de Casteljau split at the midpoint; exact in rationals.
void split_half(const std::vector<Rational>& b, std::vector<Rational>& left,
                std::vector<Rational>& right) {
  std::size_t d = b.size() - 1;
  std::vector<Rational> cur = b;
  left.assign(d + 1, Rational(0));
  right.assign(d + 1, Rational(0));
  left[0] = cur[0];
  right[d] = cur[d];
  const Rational half(1, 2);
  for (std::size_t r = 1; r <= d; ++r) {
    for (std::size_t i = 0; i + r <= d; ++i) cur[i] = half * (cur[i] + cur[i + 1]);
    left[r] = cur[0];
    right[d - r] = cur[d - r];
  }
}

constexpr std::size_t kMaxSegments = 4096;

}  // namespace

Enclosure supnorm01_enclosure(const Poly& f, unsigned refinement) {
  if (f.is_zero()) return Enclosure::exact(Rational(0));
  if (f.degree() == 0) return Enclosure::exact(abs(f.coeff(0)));

  // One sign among the nonzero coefficients: |f| peaks at t = 1.
  {
    int seen = 0;
    bool mixed = false;
    for (const auto& a : f.coeffs()) {
      int s = a.sign();
      if (s == 0) continue;
      if (seen == 0)
        seen = s;
      else if (s != seen)
        mixed = true;
    }
    if (!mixed) return Enclosure::exact(abs(eval(f, Rational(1))));
  }

  std::vector<std::vector<Rational>> segs{bernstein_from_power(f.coeffs())};
  // Segment endpoint values are Bernstein b_0 / b_d, so the witnessed lower
  // bound needs no t coordinates.
  Rational lo = std::max(abs(segs[0].front()), abs(segs[0].back()));

  for (unsigned round = 0; round < refinement; ++round) {
    std::vector<std::vector<Rational>> keep;
    for (auto& b : segs) {
      if (max_abs(b) > lo) keep.push_back(std::move(b));
    }
    if (keep.empty()) return Enclosure::exact(lo);
    if (keep.size() * 2 > kMaxSegments) {
      segs = std::move(keep);
      break;
    }
    std::vector<std::vector<Rational>> next;
    next.reserve(keep.size() * 2);
    for (const auto& b : keep) {
      std::vector<Rational> l, r;
      split_half(b, l, r);
      Rational mid = abs(l.back());  // shared endpoint of the two halves
      if (mid > lo) lo = mid;
      next.push_back(std::move(l));
      next.push_back(std::move(r));
    }
    segs = std::move(next);
  }

  Rational hi = lo;
  for (const auto& b : segs) {
    Rational m = max_abs(b);
    if (m > hi) hi = m;
  }
  return Enclosure(lo, hi);
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = mag == Rational(1);
    if (j == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << " ";
      os << "t";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

namespace {

struct PolyTerm {
  Rational coeff;
  std::size_t deg;
};

PolyTerm parse_term(const std::string& term) {
  std::string s = term;
  std::size_t tpos = s.find('t');
  if (tpos == std::string::npos) return {Rational::parse(s), 0};

  std::string cs = s.substr(0, tpos);
  std::string rest = s.substr(tpos + 1);
  // tolerate "3*t" and bare "t" / "-t"
  std::size_t ce = cs.find_last_not_of(" \t*");
  cs = ce == std::string::npos ? "" : cs.substr(0, ce + 1);
  Rational c(1);
  if (cs == "-")
    c = Rational(-1);
  else if (!cs.empty() && cs != "+")
    c = Rational::parse(cs);

  std::size_t deg = 1;
  std::size_t rb = rest.find_first_not_of(" \t");
  if (rb != std::string::npos) {
    if (rest[rb] != '^')
      throw std::invalid_argument("Poly: bad term \"" + term + "\"");
    std::string ds = rest.substr(rb + 1);
    std::size_t db = ds.find_first_not_of(" \t");
    std::size_t de = ds.find_last_not_of(" \t");
    ds = db == std::string::npos ? "" : ds.substr(db, de - db + 1);
    if (ds.empty() || ds.size() > 6 ||
        ds.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("Poly: bad exponent in \"" + term + "\"");
    deg = std::stoul(ds);
  }
  return {c, deg};
}

}  // namespace

Poly Poly::parse(const std::string& text) {
  std::string s = text;
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("Poly: empty input");

  // Split on top-level +/- (a sign directly after 'e' belongs to a decimal
  // exponent, one at the start belongs to the first term).
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = b; i < s.size(); ++i) {
    char ch = s[i];
    if ((ch == '+' || ch == '-') && !cur.empty()) {
      std::size_t last = cur.find_last_not_of(" \t");
      char prev = last == std::string::npos ? '\0' : cur[last];
      if (prev != 'e' && prev != 'E' && prev != '\0') {
        terms.push_back(cur);
        cur.clear();
        if (ch == '-') cur.push_back('-');
        continue;
      }
    }
    cur.push_back(ch);
  }
  terms.push_back(cur);

  std::vector<Rational> coeffs;
  for (const auto& t : terms) {
    std::size_t tb = t.find_first_not_of(" \t-+");
    if (tb == std::string::npos)
      throw std::invalid_argument("Poly: dangling sign in \"" + text + "\"");
    PolyTerm pt = parse_term(t);
    if (coeffs.size() <= pt.deg) coeffs.resize(pt.deg + 1, Rational(0));
    coeffs[pt.deg] += pt.coeff;
  }
  return Poly(std::move(coeffs));
}

}  // namespace normcert
