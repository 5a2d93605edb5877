#include "normcert/operators.hpp"

#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace normcert {

Functional Functional::explicit_finite(std::map<Index, Rational> basis_values) {
  auto table = std::make_shared<std::map<Index, Rational>>(std::move(basis_values));
  return Functional(
      [table](Index k) {
        auto it = table->find(k);
        return it == table->end() ? Rational(0) : it->second;
      },
      "explicit");
}

Functional Functional::growth_rule(std::function<Rational(Index)> g, std::string name) {
  return Functional(std::move(g), std::move(name));
}

Functional Functional::zero() {
  return Functional([](Index) { return Rational(0); }, "0");
}

Rational Functional::operator()(const FinSuppVec& u) const {
  Rational acc(0);
  for (const auto& [k, v] : u.entries()) acc += v * coeff_(k);
  return acc;
}

LinearMap LinearMap::identity() {
  LinearMap m(Kind::Identity);
  m.name_ = "identity";
  return m;
}

LinearMap LinearMap::basis_image(std::function<FinSuppVec(Index)> rule,
                                 std::string name) {
  LinearMap m(Kind::BasisImage);
  m.rule_ = std::move(rule);
  m.name_ = std::move(name);
  return m;
}

LinearMap LinearMap::rank_one_perturb(Functional phi, FinSuppVec pivot,
                                      std::string name) {
  LinearMap m(Kind::RankOnePerturb);
  m.phi_ = std::move(phi);
  m.pivot_ = std::move(pivot);
  m.name_ = std::move(name);
  return m;
}

LinearMap LinearMap::deriv() {
  LinearMap m(Kind::Derivative);
  m.name_ = "derivative";
  return m;
}

LinearMap LinearMap::antideriv() {
  LinearMap m(Kind::Antiderivative);
  m.name_ = "antiderivative";
  return m;
}

LinearMap LinearMap::compose(std::vector<LinearMap> stages) {
  LinearMap m(Kind::Compose);
  std::ostringstream name;
  name << "compose(";
  for (std::size_t i = 0; i < stages.size(); ++i)
    name << (i ? ", " : "") << stages[i].name();
  name << ")";
  m.stages_ = std::move(stages);
  m.name_ = name.str();
  return m;
}

FinSuppVec LinearMap::operator()(const FinSuppVec& u) const {
  switch (kind_) {
    case Kind::Identity:
      return u;
    case Kind::BasisImage: {
      if (relabel_) {
        // Relabelings must be injective on the exercised indices; refuse
        // collisions even when the colliding values would cancel.
        FinSuppVec out;
        std::set<Index> seen;
        for (const auto& [k, v] : u.entries()) {
          Index t = relabel_(k);
          if (!seen.insert(t).second)
            throw std::invalid_argument("thm11_iso " + name_ +
                                        ": relabeling collides at index " +
                                        std::to_string(t));
          out.set(t, v);
        }
        return out;
      }
      FinSuppVec out;
      for (const auto& [k, v] : u.entries()) out = out + v * rule_(k);
      return out;
    }
    case Kind::RankOnePerturb:
      return u - phi_(u) * pivot_;
    case Kind::Compose: {
      FinSuppVec out = u;
      for (const auto& s : stages_) out = s(out);
      return out;
    }
    case Kind::Derivative:
    case Kind::Antiderivative:
      throw std::invalid_argument("apply: " + name_ +
                                  " acts on polynomials, got a sequence vector");
  }
  throw std::logic_error("apply: bad kind");
}

Poly LinearMap::operator()(const Poly& f) const {
  switch (kind_) {
    case Kind::Identity:
      return f;
    case Kind::Derivative:
      return derivative(f);
    case Kind::Antiderivative:
      return antiderivative(f);
    case Kind::Compose: {
      Poly out = f;
      for (const auto& s : stages_) out = s(out);
      return out;
    }
    case Kind::BasisImage:
    case Kind::RankOnePerturb:
      throw std::invalid_argument("apply: " + name_ +
                                  " acts on sequence vectors, got a polynomial");
  }
  throw std::logic_error("apply: bad kind");
}

FinSuppVec apply(const LinearMap& T, const FinSuppVec& u) { return T(u); }
Poly apply(const LinearMap& T, const Poly& f) { return T(f); }

LinearMap thm13_map(std::function<Rational(Index)> growth, Index pivot,
                    std::string growth_name) {
  if (pivot < 1) throw std::invalid_argument("thm13_map: pivot must be >= 1");
  Functional phi = Functional::growth_rule(std::move(growth), growth_name);
  std::ostringstream name;
  name << "thm13:g=" << growth_name << ":pivot=" << pivot;
  return LinearMap::rank_one_perturb(std::move(phi), chi(pivot), name.str());
}

LinearMap thm13_default() {
  return thm13_map([](Index n) { return Rational(static_cast<long>(n)); }, 2, "n");
}

bool check_involution(const LinearMap& T, const std::vector<FinSuppVec>& samples) {
  for (const auto& u : samples)
    if (T(T(u)) != u) return false;
  return true;
}

Rational induced_norm_pow(const LinearMap& T, const FinSuppVec& u, unsigned long p) {
  FinSuppVec img = T(u);
  if (img.is_zero() && !u.is_zero())
    throw non_definite_error("induced norm: " + T.name() +
                             " maps a nonzero vector to zero");
  return pnorm_pow(img, p);
}

Rational induced_supnorm(const LinearMap& T, const FinSuppVec& u) {
  FinSuppVec img = T(u);
  if (img.is_zero() && !u.is_zero())
    throw non_definite_error("induced norm: " + T.name() +
                             " maps a nonzero vector to zero");
  return supnorm(img);
}

Rational induced_inner(const LinearMap& T, const FinSuppVec& u, const FinSuppVec& v) {
  FinSuppVec a = T(u), b = T(v);
  Rational acc(0);
  for (const auto& [k, x] : a.entries()) {
    Rational y = b.coordinate(k);
    if (!y.is_zero()) acc += x * y;
  }
  return acc;
}

LinearMap thm11_iso(std::function<Index(Index)> relabel, std::string name) {
  LinearMap m = LinearMap::basis_image(
      [relabel](Index k) { return chi(relabel(k)); }, std::move(name));
  m.relabel_ = std::move(relabel);
  return m;
}

LinearMap parse_map(const std::string& text) {
  auto bad = [&]() -> LinearMap {
    throw std::invalid_argument("parse_map: unknown map \"" + text + "\"");
  };
  if (text == "identity") return LinearMap::identity();
  if (text == "derivative") return LinearMap::deriv();
  if (text == "antiderivative") return LinearMap::antideriv();
  if (text.rfind("shift:", 0) == 0) {
    std::string off = text.substr(6);
    if (off.size() < 2 || off[0] != '+' ||
        off.find_first_not_of("0123456789", 1) != std::string::npos)
      return bad();
    Index d = std::stoull(off.substr(1));
    return thm11_iso([d](Index k) { return k + d; }, text);
  }
  if (text.rfind("thm13:", 0) == 0) {
    std::string rest = text.substr(6);
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos) return bad();
    std::string gpart = rest.substr(0, colon);
    std::string ppart = rest.substr(colon + 1);
    if (gpart.rfind("g=", 0) != 0 || ppart.rfind("pivot=", 0) != 0) return bad();
    std::string g = gpart.substr(2);
    std::string ps = ppart.substr(6);
    if (ps.empty() || ps.find_first_not_of("0123456789") != std::string::npos)
      return bad();
    Index pivot = std::stoull(ps);
    if (g == "n")
      return thm13_map([](Index n) { return Rational(static_cast<long>(n)); },
                       pivot, "n");
    if (g == "4^n")
      return thm13_map(
          [](Index n) {
            mpz_class v;
            mpz_ui_pow_ui(v.get_mpz_t(), 4, n);
            return Rational(v);
          },
          pivot, "4^n");
    if (g == "0")
      return thm13_map([](Index) { return Rational(0); }, pivot, "0");
    return bad();
  }
  return bad();
}

}  // namespace normcert
