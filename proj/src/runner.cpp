#include "rind/runner.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rind {

namespace {

const std::vector<std::string> kReportNames = {"vanishing", "ext", "diagonal", "uniformity",
                                               "oracles"};

int line_of_byte(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

[[noreturn]] void entry_error(std::size_t index, const std::string& what) {
  std::ostringstream msg;
  msg << "catalog entry " << index << ": " << what;
  throw std::invalid_argument(msg.str());
}

} // namespace

bool known_report_name(const std::string& name) {
  return std::find(kReportNames.begin(), kReportNames.end(), name) != kReportNames.end();
}

Catalog load_catalog(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    std::ostringstream msg;
    msg << "catalog: parse error at line " << line_of_byte(text, err.byte) << ": " << err.what();
    throw std::invalid_argument(msg.str());
  }
  if (!doc.is_object() || !doc.contains("entries"))
    throw std::invalid_argument("catalog: top level must be an object with field 'entries'");
  if (!doc["entries"].is_array())
    throw std::invalid_argument("catalog: field 'entries' must be an array");

  Catalog catalog;
  for (std::size_t idx = 0; idx < doc["entries"].size(); ++idx) {
    const nlohmann::json& j = doc["entries"][idx];
    if (!j.is_object()) entry_error(idx, "must be an object");
    for (const char* field : {"profile", "m", "reports"})
      if (!j.contains(field)) entry_error(idx, std::string("missing field '") + field + "'");
    if (!j["m"].is_number_integer()) entry_error(idx, "field 'm' must be an integer");
    if (!j["reports"].is_array()) entry_error(idx, "field 'reports' must be an array");

    CatalogEntry entry;
    try {
      entry.profile = profile_from_json(j["profile"]);
    } catch (const std::exception& err) {
      entry_error(idx, err.what());
    }
    entry.m = j["m"].get<int>();
    for (const nlohmann::json& name : j["reports"]) {
      if (!name.is_string() || !known_report_name(name.get<std::string>()))
        entry_error(idx, "unknown report name " + name.dump() +
                             " (expected vanishing | ext | diagonal | uniformity | oracles)");
      entry.reports.push_back(name.get<std::string>());
    }
    if (!admissible_level(entry.profile, entry.m))
      entry_error(idx, admissibility_violation(entry.profile, entry.m));
    catalog.entries.push_back(std::move(entry));
  }
  return catalog;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("catalog: cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog(buf.str());
}

namespace {

bool table_pattern_ok(const VanishingTable& table) {
  for (const TableEntry& entry : table.entries) {
    if (entry.nonvanishing != (entry.i <= table.i0_value)) return false;
    if (entry.nonvanishing && !entry.witness.has_value()) return false;
    if (!entry.nonvanishing && entry.certificate.is_null()) return false;
  }
  return static_cast<int>(table.entries.size()) == table.d_value + 1;
}

nlohmann::json run_entry(const CatalogEntry& entry, std::size_t idx, const RunFlags& flags) {
  const GroupProfile& profile = entry.profile;
  nlohmann::json out;
  out["profile"] = profile_to_json(profile);
  out["m"] = entry.m;
  bool pass = true;

  for (const std::string& name : entry.reports) {
    if (name == "vanishing") {
      const VanishingTable table = vanishing_table(profile, entry.m, flags.ladder);
      out["vanishing"] = table_to_json(table);
      const bool ok = table_pattern_ok(table);
      out["vanishing"]["pass"] = ok;
      pass = pass && ok;
    } else if (name == "ext") {
      const VanishingTable table = ext_table(profile, entry.m, flags.ladder);
      out["ext"] = table_to_json(table);
      const bool ok = table_pattern_ok(table);
      out["ext"]["pass"] = ok;
      pass = pass && ok;
    } else if (name == "diagonal") {
      const int d = top_dimension(profile);
      nlohmann::json results = nlohmann::json::array();
      bool ok = true;
      for (int i = 0; i <= d; ++i) {
        const bool vanishes = diagonal_vanishing(profile, i, entry.m);
        results.push_back({{"i", i}, {"vanishes", vanishes}});
        ok = ok && vanishes == (i > 0);
      }
      out["diagonal"] = {{"results", results}, {"pass", ok}};
      pass = pass && ok;
    } else if (name == "uniformity") {
      nlohmann::json payload = nlohmann::json::object();
      bool ok = true;
      for (int size : {2, 3}) {
        UniformCheckConfig cfg;
        cfg.p = profile.p;
        cfg.size = size;
        cfg.level = profile.v0();
        cfg.samples = 120;
        cfg.precision = flags.precision;
        cfg.seed = mix_seed(flags.seed, idx, static_cast<u64>(size));
        const UniformSuiteReport suite = run_uniform_suite(cfg);
        payload[size == 2 ? "gl2" : "gl3"] = uniform_report_to_json(suite);
        ok = ok && suite.pass;
      }
      payload["pass"] = ok;
      out["uniformity"] = payload;
      pass = pass && ok;
    } else if (name == "oracles") {
      const std::vector<OracleReport> reports =
          run_oracle_suite(profile, entry.m, mix_seed(flags.seed, 77, idx), flags.box);
      bool ok = true;
      for (const OracleReport& r : reports) ok = ok && r.agree;
      out["oracles"] = {{"reports", oracle_suite_to_json(reports)}, {"pass", ok}};
      pass = pass && ok;
    }
  }
  out["pass"] = pass;
  return out;
}

} // namespace

RunOutcome run_catalog(const Catalog& catalog, const RunFlags& flags) {
  RunOutcome outcome;
  std::vector<nlohmann::json> results(catalog.entries.size());

  auto work = [&](std::size_t idx) {
    try {
      results[idx] = run_entry(catalog.entries[idx], idx, flags);
    } catch (const std::exception& err) {
      results[idx] = {{"profile", profile_to_json(catalog.entries[idx].profile)},
                      {"m", catalog.entries[idx].m},
                      {"error", err.what()},
                      {"pass", false}};
    }
  };

  const std::size_t jobs =
      std::min<std::size_t>(std::max(1, flags.jobs), std::max<std::size_t>(1, catalog.entries.size()));
  if (jobs <= 1) {
    for (std::size_t idx = 0; idx < catalog.entries.size(); ++idx) work(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t idx = next.fetch_add(1); idx < catalog.entries.size();
             idx = next.fetch_add(1))
          work(idx);
      });
    for (std::thread& t : pool) t.join();
  }

  outcome.report = nlohmann::json::array();
  bool all_pass = true;
  for (nlohmann::json& r : results) {
    all_pass = all_pass && r.value("pass", false);
    outcome.report.push_back(std::move(r));
  }
  outcome.exit_code = all_pass ? 0 : 2;
  return outcome;
}

RunOutcome run_catalog_text(const std::string& text, const RunFlags& flags) {
  Catalog catalog;
  try {
    catalog = load_catalog(text);
  } catch (const std::exception& err) {
    RunOutcome outcome;
    outcome.exit_code = 1;
    outcome.error = err.what();
    outcome.report = nlohmann::json::array();
    return outcome;
  }
  return run_catalog(catalog, flags);
}

std::string profile_label(const GroupProfile& profile) {
  std::ostringstream label;
  label << profile.root_system.family << profile.root_system.rank << " p=" << profile.p
        << " e=" << profile.e << " f=" << profile.f;
  return label.str();
}

std::string summary_table(const nlohmann::json& report) {
  std::ostringstream out;
  out << std::left << std::setw(22) << "profile" << std::setw(5) << "m" << std::setw(5) << "i0"
      << std::setw(5) << "d" << std::setw(44) << "reports" << "result\n";
  for (const nlohmann::json& entry : report) {
    std::string label = "?";
    std::string i0_text = "-", d_text = "-";
    if (entry.contains("profile")) {
      try {
        const GroupProfile profile = profile_from_json(entry["profile"]);
        label = profile_label(profile);
        i0_text = std::to_string(i0(profile));
        d_text = std::to_string(top_dimension(profile));
      } catch (const std::exception&) {
        label = "?";
      }
    }
    std::string names;
    for (const std::string& name : kReportNames)
      if (entry.contains(name)) names += (names.empty() ? "" : ",") + name;
    if (entry.contains("error")) names = "error: " + entry["error"].get<std::string>();
    out << std::left << std::setw(22) << label << std::setw(5)
        << (entry.contains("m") ? entry["m"].dump() : "-") << std::setw(5) << i0_text
        << std::setw(5) << d_text << std::setw(44) << names
        << (entry.value("pass", false) ? "PASS" : "FAIL") << "\n";
  }
  return out.str();
}

} // namespace rind
