#ifndef RIND_RUNNER_HPP
#define RIND_RUNNER_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "rind/oracle.hpp"
#include "rind/padic.hpp"
#include "rind/transition.hpp"

namespace rind {

struct RunFlags {
  u64 seed = 1;
  int precision = 12;  // target digits for the uniformity suites
  int box = 4;         // dominant-cone sweep bound for the oracles
  int ladder = 3;      // witness ladder length for the tables
  int jobs = 1;
  bool summary = false;
};

// report names accepted in a catalog entry
bool known_report_name(const std::string& name);

struct CatalogEntry {
  GroupProfile profile;
  int m = 0;
  std::vector<std::string> reports;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
};

// parses and validates; throws std::invalid_argument carrying the line (for
// syntax errors) or the entry index and field (for content errors)
Catalog load_catalog(const std::string& text);
Catalog load_catalog_file(const std::string& path);

struct RunOutcome {
  int exit_code = 0;      // 0 all pass, 2 some check failed, 1 input error
  nlohmann::json report;  // array, one object per entry, catalog order
  std::string error;      // set when exit_code == 1
};

// executes every requested report; entries run concurrently up to flags.jobs,
// output order is catalog order regardless of completion order
RunOutcome run_catalog(const Catalog& catalog, const RunFlags& flags);

// parse + run; parse errors become exit 1 outcomes instead of exceptions
RunOutcome run_catalog_text(const std::string& text, const RunFlags& flags);

// fixed-width human-readable digest of a run report
std::string summary_table(const nlohmann::json& report);

std::string profile_label(const GroupProfile& profile);

} // namespace rind

#endif
