#ifndef RIND_TRANSITION_HPP
#define RIND_TRANSITION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rind/cohomology.hpp"

namespace rind {

// One restriction step H^i(K_m n zK_n z^-1) -> H^i(K_m n zK_{n'} z^-1).
// n = n' is allowed and is the identity map; the symbolic all-z argument
// additionally demands a full p-power step n' >= n + e.
struct TransitionQuery {
  const GroupProfile* profile = nullptr;
  int m = 0;
  int n = 0;
  int nprime = 0;
  Cocharacter z;
  int i = 0;
};

// throws std::invalid_argument naming the violated condition
void validate_query(const TransitionQuery& q);

// rank of the induced map on dual Frattini quotients of one factor,
// delta * f * clamp(level_src + e - level_tgt, 0, e)
int factor_rank(int level_src, int level_tgt, int delta, int e, int f);

struct BlockFate {
  Block block;
  std::vector<int> neg_ranks;
  int center_rank = 0;
  std::vector<int> pos_ranks;
  bool survives = false;
};

BlockFate block_fate(const TransitionQuery& q, const Block& blk);

// result of the symbolic all-z vanishing decision; when false, the witness is
// the counterexample produced by the greedy construction
struct ResDecision {
  bool zero_for_all_z = false;
  nlohmann::json certificate;
  std::optional<std::pair<Cocharacter, Block>> witness;
};

ResDecision res_is_zero_for_all_z(const GroupProfile& profile, int i, int m, int n, int nprime);

std::optional<std::pair<Cocharacter, Block>> nonvanishing_witness(const GroupProfile& profile,
                                                                  int i, int m, int n, int nprime);

struct TableEntry {
  int i = 0;
  bool nonvanishing = false;
  std::optional<std::pair<Cocharacter, Block>> witness;
  nlohmann::json certificate;
};

struct VanishingTable {
  GroupProfile profile;
  int m = 0;
  int i0_value = 0;
  int d_value = 0;
  std::vector<int> ladder;  // levels n_0 = m < n_1 < ... the witness survives through
  std::vector<TableEntry> entries;  // i = 0..d
  std::string label = "vanishing";  // "vanishing" or "ext"
};

// entries nonvanishing exactly for i <= i0; witnesses verified on every ladder
// rung, certificates from the symbolic engine; ladder_len >= 2
VanishingTable vanishing_table(const GroupProfile& profile, int m, int ladder_len = 3);

// identical content relabeled as smooth-dual Ext degrees
VanishingTable ext_table(const GroupProfile& profile, int m, int ladder_len = 3);

nlohmann::json table_to_json(const VanishingTable& table);

// checks the shape-level p-power identity across sampled dominant z and
// returns i > 0; the identity failing would be a logic error, not a result
bool diagonal_vanishing(const GroupProfile& profile, int i, int n);

struct StrictInclusion {
  bool strict = false;
  nlohmann::json certificate;
};

StrictInclusion strict_inclusion_check(const GroupProfile& profile, int m, int n, int nprime);

// the admissibility message shared by table ops and the CLI
std::string admissibility_violation(const GroupProfile& profile, int m);

} // namespace rind

#endif
