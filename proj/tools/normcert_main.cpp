// Command-line front end: pick demos, set depths and formats, write
// certificate bundles. Exit code 0 means every claim came out as promised,
// 1 flags a violation or an undecided row, 2 a usage problem.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "normcert/demos.hpp"

int main(int argc, char** argv) {
  CLI::App app{"normcert: exact certificates for norm (non-)equivalence claims"};
  app.get_formatter()->column_width(26);

  normcert::DemoConfig cfg;
  bool list = false;
  std::string p_text = "1";

  app.add_option("--demo", cfg.demo, "run one demo (see --list)");
  app.add_flag("--all", cfg.all, "run every demo");
  app.add_flag("--list", list, "list the demo registry and exit");
  app.add_option("--depth", cfg.depth, "sequence depth N (default 100)")
      ->check(CLI::Range(std::uint64_t(2), std::uint64_t(1000000)));
  app.add_option("--p", p_text, "norm exponent: 1, 2, 3, ... or inf");
  app.add_option("--refine", cfg.refinement,
                 "enclosure subdivision budget (default 32)");
  app.add_option("--seed", cfg.seed, "seed for sampled vectors (default 1729)");
  app.add_option("--format", cfg.format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", cfg.out, "write the bundle to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list) {
    for (const auto& [id, description] : normcert::list_demos())
      std::cout << id << " — " << description << "\n";
    return 0;
  }

  try {
    cfg.p = normcert::Exponent::parse(p_text);
  } catch (const std::exception& e) {
    std::cerr << "bad --p value: " << e.what() << "\n";
    return 2;
  }

  if (cfg.demo.empty() && !cfg.all) {
    std::cerr << "nothing to do: pass --demo NAME, --all, or --list\n";
    return 2;
  }
  if (!cfg.demo.empty() && !normcert::is_demo(cfg.demo)) {
    std::cerr << "unknown demo \"" << cfg.demo << "\"; try --list\n";
    return 2;
  }

  normcert::DemoResult result;
  try {
    result = normcert::run_demo(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (result.exit_code == 2) {
    std::cerr << "unusable configuration\n";
    return 2;
  }

  if (cfg.out.empty()) {
    std::cout << result.rendered;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << cfg.out << " for writing\n";
      return 2;
    }
    f << result.rendered;
  }
  return result.exit_code;
}
