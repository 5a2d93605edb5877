#include "normcert/certificate.hpp"

#include <sstream>

#include "json.hpp"

namespace normcert {

std::string Verdict::str() const {
  switch (kind) {
    case Kind::AllHold:
      return "AllHold";
    case Kind::ViolatedAt:
      return "ViolatedAt(" + std::to_string(at) + ")";
    case Kind::UndecidedAt:
      return "UndecidedAt(" + std::to_string(at) + ")";
  }
  return "?";
}

void Certificate::add_param(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}

void Certificate::push_row(CertRow row) {
  // First problem wins; an undecided row degrades the verdict but never
  // upgrades a violation.
  if (row.undecided) {
    if (verdict.kind == Verdict::Kind::AllHold)
      verdict = {Verdict::Kind::UndecidedAt, row.n};
  } else if (!row.holds) {
    if (verdict.kind != Verdict::Kind::ViolatedAt)
      verdict = {Verdict::Kind::ViolatedAt, row.n};
  }
  rows.push_back(std::move(row));
}

bool Certificate::as_expected() const {
  if (expect_violation) return verdict.kind == Verdict::Kind::ViolatedAt;
  return verdict.kind == Verdict::Kind::AllHold;
}

namespace {

nlohmann::ordered_json cert_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["claim_id"] = c.claim_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  j["params"] = std::move(params);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : c.rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    if (r.m) row["m"] = *r.m;
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["holds"] = r.holds;
    if (r.undecided) row["undecided"] = true;
    if (r.note) row["note"] = *r.note;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["verdict"] = c.verdict.str();
  if (c.expect_violation) j["expect_violation"] = true;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out += "\"";
  return out;
}

}  // namespace

std::string to_json(const Certificate& c) { return cert_json(c).dump(2); }

std::string to_csv(const Certificate& c) {
  std::ostringstream os;
  os << "claim_id,n,m,lhs,rhs,holds,note\n";
  for (const auto& r : c.rows) {
    os << csv_escape(c.claim_id) << "," << r.n << ",";
    if (r.m) os << *r.m;
    os << "," << csv_escape(r.lhs) << "," << csv_escape(r.rhs) << ","
       << (r.undecided ? "undecided" : r.holds ? "true" : "false") << ","
       << (r.note ? csv_escape(*r.note) : "") << "\n";
  }
  return os.str();
}

std::string to_text(const Certificate& c) {
  std::ostringstream os;
  os << c.claim_id;
  if (!c.params.empty()) {
    os << " [";
    bool first = true;
    for (const auto& [k, v] : c.params) {
      if (!first) os << ", ";
      os << k << "=" << v;
      first = false;
    }
    os << "]";
  }
  os << "\n  rows: " << c.rows.size() << ", verdict: " << c.verdict.str();
  if (c.expect_violation) os << " (violation expected)";
  os << (c.as_expected() ? " -- ok" : " -- UNEXPECTED") << "\n";
  if (!c.as_expected() || c.verdict.kind != Verdict::Kind::AllHold) {
    for (const auto& r : c.rows) {
      if (r.holds && !r.undecided) continue;
      os << "    n=" << r.n;
      if (r.m) os << " m=" << *r.m;
      os << " lhs=" << r.lhs << " rhs=" << r.rhs
         << (r.undecided ? " [undecided]" : " [violated]");
      if (r.note) os << " (" << *r.note << ")";
      os << "\n";
      break;  // first offender is enough for the text view
    }
  }
  return os.str();
}

}  // namespace normcert
