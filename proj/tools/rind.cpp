#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rind/runner.hpp"

namespace {

int write_json(const std::string& path, const nlohmann::json& doc) {
  if (path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file " << path << "\n";
    return 1;
  }
  out << doc.dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculators and verifiers for congruence-level induction data"};
  app.require_subcommand(1);

  std::string catalog_path, output_path, report_path;
  rind::RunFlags flags;

  CLI::App* run = app.add_subcommand("run", "execute every report requested by a catalog");
  run->add_option("--catalog", catalog_path, "catalog JSON file")->required();
  run->add_option("--output", output_path, "report JSON path (stdout when omitted)");
  run->add_option("--seed", flags.seed, "deterministic base seed");
  run->add_option("--precision", flags.precision, "target digits for uniformity checks");
  run->add_option("--box", flags.box, "dominant-cone sweep bound for oracles");
  run->add_option("--ladder", flags.ladder, "witness ladder length for tables");
  run->add_option("--jobs", flags.jobs, "concurrent catalog entries");
  run->add_flag("--summary", flags.summary, "print a human-readable digest to stdout");

  CLI::App* suite = app.add_subcommand("oracle-suite", "brute-force cross-checks per entry");
  suite->add_option("--catalog", catalog_path, "catalog JSON file")->required();
  suite->add_option("--report", report_path, "report JSON path")->required();
  suite->add_option("--seed", flags.seed, "deterministic base seed");
  suite->add_option("--box", flags.box, "dominant-cone sweep bound");

  rind::UniformCheckConfig uniform_cfg;
  uniform_cfg.samples = 1000;
  CLI::App* verify = app.add_subcommand("verify-uniform", "seeded p-adic matrix lemma checks");
  verify->add_option("--p", uniform_cfg.p, "prime");
  verify->add_option("--size", uniform_cfg.size, "matrix size");
  verify->add_option("--level", uniform_cfg.level, "congruence level");
  verify->add_option("--samples", uniform_cfg.samples, "sample count per check");
  verify->add_option("--precision", uniform_cfg.precision, "target digits");
  verify->add_option("--seed", uniform_cfg.seed, "deterministic seed");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    rind::Catalog catalog;
    try {
      catalog = rind::load_catalog_file(catalog_path);
    } catch (const std::exception& err) {
      std::cerr << err.what() << "\n";
      return 1;
    }
    const rind::RunOutcome outcome = rind::run_catalog(catalog, flags);
    if (write_json(output_path, outcome.report) != 0) return 1;
    if (flags.summary) std::cout << rind::summary_table(outcome.report);
    return outcome.exit_code;
  }

  if (suite->parsed()) {
    rind::Catalog catalog;
    try {
      catalog = rind::load_catalog_file(catalog_path);
    } catch (const std::exception& err) {
      std::cerr << err.what() << "\n";
      return 1;
    }
    nlohmann::json report = nlohmann::json::array();
    bool all = true;
    for (std::size_t idx = 0; idx < catalog.entries.size(); ++idx) {
      const rind::CatalogEntry& entry = catalog.entries[idx];
      try {
        const std::vector<rind::OracleReport> checks = rind::run_oracle_suite(
            entry.profile, entry.m, rind::mix_seed(flags.seed, 77, idx), flags.box);
        bool pass = true;
        for (const rind::OracleReport& r : checks) pass = pass && r.agree;
        report.push_back({{"profile", rind::profile_to_json(entry.profile)},
                          {"m", entry.m},
                          {"reports", rind::oracle_suite_to_json(checks)},
                          {"pass", pass}});
        all = all && pass;
      } catch (const std::exception& err) {
        report.push_back({{"profile", rind::profile_to_json(entry.profile)},
                          {"m", entry.m},
                          {"error", err.what()},
                          {"pass", false}});
        all = false;
      }
    }
    if (write_json(report_path, report) != 0) return 1;
    return all ? 0 : 2;
  }

  // verify-uniform
  try {
    const rind::UniformSuiteReport report = rind::run_uniform_suite(uniform_cfg);
    std::cout << rind::uniform_report_to_json(report).dump(2) << "\n";
    return report.pass ? 0 : 2;
  } catch (const std::exception& err) {
    std::cerr << err.what() << "\n";
    return 1;
  }
}
