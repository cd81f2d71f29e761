#ifndef RIND_ORACLE_HPP
#define RIND_ORACLE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "rind/transition.hpp"

namespace rind {

// one brute-force cross-check; agreement is exact integer equality, never a
// tolerance
struct OracleReport {
  std::string oracle;
  std::string instance;
  i64 closed_form = 0;
  i64 brute_force = 0;
  bool agree = false;
};

nlohmann::json oracle_report_to_json(const OracleReport& report);

// rank of the explicit a-th exterior power: the C(n,a) x C(m,a) matrix of
// a x a minors, row-reduced over F_p
int wedge_rank_oracle(const std::vector<std::vector<u64>>& matrix, int a, u64 p,
                      int dim_cap = 6);

// F_p-dimension of the image of pi^{s'} O^delta in pi^s O^delta / pi^{s+e} O^delta,
// O = Z_p[w, x] / (x^e - p, unramified part of degree f), computed by honest
// carry arithmetic on coefficient vectors, not by the clamp formula
int frattini_rank_oracle(int s, int sprime, int e, int f, int delta, u64 p);

// weighted block count for every degree at once, by exhaustive odometer
// enumeration of all per-factor wedge degrees
std::vector<u64> block_convolution_all(const GroupProfile& profile, int d_cap = 20);
u64 block_convolution_oracle(const GroupProfile& profile, int i, int d_cap = 20);

struct PerZOracleResult {
  bool survivor_found = false;
  bool box_limited = false;  // empty sweep in a shallow box; witness checked directly
  bool agrees = false;
  std::string detail;
};

// exhaustive (dominant z in box) x (blocks of degree i) survival sweep,
// compared against the symbolic all-z decision and its witness
PerZOracleResult per_z_resvan_oracle(const GroupProfile& profile, int i, int m, int n,
                                     int nprime, int box,
                                     std::size_t pair_cap = 2'000'000);

// every oracle family on one profile; wedge instances are seeded samples
std::vector<OracleReport> run_oracle_suite(const GroupProfile& profile, int m, u64 seed,
                                           int box = 4, int wedge_samples = 40);

nlohmann::json oracle_suite_to_json(const std::vector<OracleReport>& reports);

} // namespace rind

#endif
