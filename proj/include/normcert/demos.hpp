#pragma once

// The claim catalog: named demos that assemble generators, norms, and
// checkers into certificate bundles. The CLI is a thin shell over this.

#include <cstdint>
#include <string>
#include <vector>

#include "normcert/certificate.hpp"
#include "normcert/rational.hpp"

namespace normcert {

struct DemoConfig {
  std::string demo;  // one registry id, or empty with all = true
  bool all = false;
  std::uint64_t depth = 100;   // >= 2
  Exponent p = Exponent::finite(1);
  unsigned refinement = 32;
  std::uint64_t seed = 1729;
  std::string format = "text";  // text | json | csv
  std::string out;              // empty = stdout
};

struct DemoResult {
  std::vector<Certificate> certificates;
  // 0: every certificate matched its expectation. 1: some verdict was
  // off (violation where AllHold was promised, Undecided anywhere, or a
  // missing violation). 2: unusable configuration.
  int exit_code = 0;
  std::string rendered;  // in the requested format
};

std::vector<std::pair<std::string, std::string>> list_demos();

bool is_demo(const std::string& id);

// Runs cfg.demo (or all of them) and renders the bundle.
DemoResult run_demo(const DemoConfig& cfg);

}  // namespace normcert
