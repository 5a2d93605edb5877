#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "json.hpp"
#include "normcert/demos.hpp"

using namespace normcert;

TEST_CASE("the registry lists every demo with a description") {
  auto demos = list_demos();
  CHECK(demos.size() == 9);
  std::set<std::string> ids;
  for (const auto& [id, description] : demos) {
    ids.insert(id);
    CHECK_FALSE(description.empty());
    CHECK(is_demo(id));
  }
  CHECK(ids.count("thm1.3"));
  CHECK(ids.count("cor2.2"));
  CHECK(ids.count("example-derivative"));
  CHECK(ids.count("lemma4.1a"));
  CHECK(ids.count("lemma4.1b"));
  CHECK(ids.count("thm4.3"));
  CHECK(ids.count("parallelogram"));
  CHECK(ids.count("axioms"));
  CHECK(ids.count("thm1.1-isometry"));
  CHECK_FALSE(is_demo("thm9.9"));

  CHECK(demos[0].first == "thm1.3");
  CHECK(demos[0].second.find("proof of Theorem 1.3") == 0);
}

TEST_CASE("every demo passes at a small depth") {
  for (const auto& [id, description] : list_demos()) {
    DemoConfig cfg;
    cfg.demo = id;
    cfg.depth = 12;
    DemoResult r = run_demo(cfg);
    INFO("demo ", id);
    CHECK(r.exit_code == 0);
    CHECK_FALSE(r.certificates.empty());
    for (const auto& c : r.certificates) {
      INFO("claim ", c.claim_id);
      CHECK(c.as_expected());
    }
    CHECK_FALSE(r.rendered.empty());
  }
}

TEST_CASE("expected violations are flagged and count as success") {
  DemoConfig cfg;
  cfg.demo = "parallelogram";
  cfg.depth = 10;
  DemoResult r = run_demo(cfg);
  CHECK(r.exit_code == 0);
  bool saw_violation = false;
  for (const auto& c : r.certificates)
    if (c.expect_violation) {
      saw_violation = true;
      CHECK(c.verdict.kind == Verdict::Kind::ViolatedAt);
    }
  CHECK(saw_violation);
}

TEST_CASE("identical configurations render byte-identical output") {
  for (const std::string& fmt : {"text", "json", "csv"}) {
    DemoConfig cfg;
    cfg.demo = "thm1.3";
    cfg.depth = 25;
    cfg.format = fmt;
    DemoResult a = run_demo(cfg);
    DemoResult b = run_demo(cfg);
    CHECK(a.rendered == b.rendered);
    CHECK(a.exit_code == 0);
  }
}

TEST_CASE("json bundles parse and carry the config") {
  DemoConfig cfg;
  cfg.demo = "cor2.2";
  cfg.depth = 15;
  cfg.format = "json";
  cfg.seed = 99;
  DemoResult r = run_demo(cfg);
  auto j = nlohmann::json::parse(r.rendered);
  CHECK(j.contains("demos"));
  CHECK(j.contains("config"));
  CHECK(j["config"]["demo"] == "cor2.2");
  CHECK(j["config"]["depth"] == 15);
  CHECK(j["config"]["seed"] == 99);
  CHECK(j["demos"].is_array());
  CHECK(j["demos"].size() == 4);
  for (const auto& cert : j["demos"]) {
    CHECK(cert.contains("claim_id"));
    CHECK(cert.contains("rows"));
    CHECK(cert.contains("verdict"));
    for (const auto& row : cert["rows"]) {
      CHECK(row.contains("lhs"));
      CHECK(row.contains("rhs"));
      CHECK(row.contains("holds"));
    }
  }
}

TEST_CASE("csv bundles have a single header") {
  DemoConfig cfg;
  cfg.all = true;
  cfg.depth = 12;
  cfg.format = "csv";
  DemoResult r = run_demo(cfg);
  CHECK(r.exit_code == 0);
  std::size_t count = 0, pos = 0;
  while ((pos = r.rendered.find("claim_id,n,m,lhs,rhs,holds,note", pos)) !=
         std::string::npos) {
    ++count;
    ++pos;
  }
  CHECK(count == 1);
  CHECK(r.rendered.rfind("claim_id,n,m,lhs,rhs,holds,note\n", 0) == 0);
}

TEST_CASE("running all demos bundles every certificate") {
  DemoConfig cfg;
  cfg.all = true;
  cfg.depth = 12;
  cfg.format = "json";
  DemoResult r = run_demo(cfg);
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.rendered);
  CHECK(j["config"]["demo"] == "all");
  std::set<std::string> claims;
  for (const auto& cert : j["demos"])
    claims.insert(cert["claim_id"].get<std::string>());
  CHECK(claims.count("thm1.3/ratio-divergence"));
  CHECK(claims.count("thm1.3/involution"));
  CHECK(claims.count("cor2.2/cauchy-in-l1"));
  CHECK(claims.count("lemma4.1a/escape"));
  CHECK(claims.count("parallelogram/sup-norm-fails"));
  CHECK(claims.count("thm4.3/coordinate-bound-fails"));
  CHECK(claims.count("thm1.1-isometry/shift"));
  CHECK(claims.count("thm1.1-isometry/permutation"));
}

TEST_CASE("a promised violation that cannot manifest yet exits with code 1") {
  DemoConfig cfg;
  cfg.demo = "thm4.3";
  cfg.depth = 10;  // violating sample is T chi_11
  DemoResult shallow = run_demo(cfg);
  CHECK(shallow.exit_code == 1);

  cfg.depth = 11;
  CHECK(run_demo(cfg).exit_code == 0);
}

TEST_CASE("unusable configurations exit with code 2") {
  DemoConfig bad_depth;
  bad_depth.demo = "thm1.3";
  bad_depth.depth = 1;
  CHECK(run_demo(bad_depth).exit_code == 2);

  DemoConfig bad_fmt;
  bad_fmt.demo = "thm1.3";
  bad_fmt.format = "xml";
  CHECK(run_demo(bad_fmt).exit_code == 2);

  DemoConfig unknown;
  unknown.demo = "thm9.9";
  CHECK(run_demo(unknown).exit_code == 2);

  DemoConfig nothing;
  CHECK(run_demo(nothing).exit_code == 2);
}

TEST_CASE("the exponent flag routes the escape family") {
  for (unsigned long p : {1UL, 2UL, 5UL}) {
    DemoConfig cfg;
    cfg.demo = "lemma4.1a";
    cfg.depth = 12;
    cfg.p = Exponent::finite(p);
    DemoResult r = run_demo(cfg);
    INFO("p = ", p);
    CHECK(r.exit_code == 0);
  }
}
