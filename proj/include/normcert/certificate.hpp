#pragma once

// Machine-checkable verdicts. A certificate is a claim id, the parameters
// that pin the instance, exact per-row values, and a verdict that is
// AllHold exactly when every row holds. All numbers are rational strings so
// each row can be re-checked by cross-multiplication.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normcert/rational.hpp"

namespace normcert {

struct CertRow {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> m;  // second index for pair-shaped claims
  std::string lhs;
  std::string rhs;
  bool holds = false;
  bool undecided = false;
  std::optional<std::string> note;
};

struct Verdict {
  enum class Kind { AllHold, ViolatedAt, UndecidedAt };
  Kind kind = Kind::AllHold;
  std::uint64_t at = 0;

  std::string str() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Certificate {
  std::string claim_id;
  std::vector<std::pair<std::string, std::string>> params;  // insertion order
  std::vector<CertRow> rows;
  Verdict verdict;
  // Set by the demo registry for claims whose point is a violation
  // (non-norms, unbounded coordinates); drives the process exit code.
  bool expect_violation = false;

  void add_param(const std::string& key, const std::string& value);
  void push_row(CertRow row);  // updates the verdict

  bool all_hold() const { return verdict.kind == Verdict::Kind::AllHold; }
  // A certificate is "as expected" when its verdict matches what the claim
  // promises: AllHold normally, ViolatedAt for expect_violation ones.
  bool as_expected() const;
};

std::string to_json(const Certificate& c);
std::string to_csv(const Certificate& c);
std::string to_text(const Certificate& c);

}  // namespace normcert
