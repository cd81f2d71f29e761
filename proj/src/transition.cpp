#include "rind/transition.hpp"

#include <algorithm>
#include <stdexcept>

namespace rind {

std::string admissibility_violation(const GroupProfile& profile, int m) {
  if (admissible_level(profile, m)) return "";
  return "inadmissible level m = " + std::to_string(m) + " for (p = " + std::to_string(profile.p) +
         ", e = " + std::to_string(profile.e) +
         "): violates \"m ∈ eℕ, and m > e if p = 2\"";
}

namespace {

void require_admissible(const GroupProfile& profile, int m, const char* where) {
  const std::string violation = admissibility_violation(profile, m);
  if (!violation.empty()) throw std::invalid_argument(std::string(where) + ": " + violation);
}

} // namespace

void validate_query(const TransitionQuery& q) {
  if (q.profile == nullptr) throw std::invalid_argument("transition query: missing profile");
  require_admissible(*q.profile, q.m, "transition query");
  require_admissible(*q.profile, q.n, "transition query");
  require_admissible(*q.profile, q.nprime, "transition query");
  if (!(q.m <= q.n && q.n <= q.nprime))
    throw std::invalid_argument("transition query: levels must satisfy m <= n <= n'");
  if (!is_dominant(*q.profile, q.z))
    throw std::invalid_argument("transition query: cocharacter is not dominant");
  if (q.i < 0) throw std::invalid_argument("transition query: negative degree");
}

int factor_rank(int level_src, int level_tgt, int delta, int e, int f) {
  if (level_tgt < level_src)
    throw std::invalid_argument("factor_rank: target level above source level");
  const int depth = std::clamp(level_src + e - level_tgt, 0, e);
  return delta * f * depth;
}

BlockFate block_fate(const TransitionQuery& q, const Block& blk) {
  validate_query(q);
  if (blk.degree() != q.i)
    throw std::invalid_argument("block_fate: block degree does not match the query degree");
  const GroupProfile& pr = *q.profile;
  const std::size_t nroots = pr.root_system.num_reduced();

  const FiltrationShape source =
      intersect(congruence_shape(pr, q.m), conjugate(congruence_shape(pr, q.n), q.z));
  const FiltrationShape target =
      intersect(congruence_shape(pr, q.m), conjugate(congruence_shape(pr, q.nprime), q.z));

  BlockFate fate;
  fate.block = blk;
  fate.neg_ranks.resize(nroots);
  fate.pos_ranks.resize(nroots);
  fate.survives = true;

  for (std::size_t j = 0; j < nroots; ++j) {
    // the negative enumeration is the reversed positive one; root data follows the root
    const int delta_neg = pr.root_dim_F(nroots - 1 - j);
    fate.neg_ranks[j] =
        factor_rank(source.neg_levels[j], target.neg_levels[j], delta_neg, pr.e, pr.f);
    if (blk.a[j] > fate.neg_ranks[j]) fate.survives = false;

    const int delta_pos = pr.root_dim_F(j);
    fate.pos_ranks[j] =
        factor_rank(source.pos_levels[j], target.pos_levels[j], delta_pos, pr.e, pr.f);
    if (blk.c[j] > fate.pos_ranks[j]) fate.survives = false;
  }
  fate.center_rank =
      factor_rank(source.center_level, target.center_level, pr.torus_rank, pr.e, pr.f);
  if (blk.b > fate.center_rank) fate.survives = false;
  return fate;
}

namespace {

// fill the a-indices to capacity along the fixed negative enumeration
Block greedy_block(const GroupProfile& profile, int degree) {
  const FrattiniDims fd = profile_frattini_dims(profile);
  Block blk = zero_block(profile);
  int remaining = degree;
  for (std::size_t j = 0; j < fd.neg.size() && remaining > 0; ++j) {
    blk.a[j] = std::min(remaining, fd.neg[j]);
    remaining -= blk.a[j];
  }
  if (remaining != 0) throw std::logic_error("greedy_block: degree exceeds negative capacity");
  return blk;
}

nlohmann::json witness_to_json(const GroupProfile& profile,
                               const std::pair<Cocharacter, Block>& w) {
  return {{"z", w.first.coords}, {"block", block_to_json(profile, w.second)}};
}

} // namespace

std::optional<std::pair<Cocharacter, Block>> nonvanishing_witness(const GroupProfile& profile,
                                                                  int i, int m, int n,
                                                                  int nprime) {
  const int d = top_dimension(profile);
  if (i < 0 || i > d)
    throw std::invalid_argument("nonvanishing_witness: degree out of range [0, d]");
  if (i > i0(profile)) return std::nullopt;

  TransitionQuery q;
  q.profile = &profile;
  q.m = m;
  q.n = n;
  q.nprime = nprime;
  q.z = find_deep_dominant(profile, nprime - m);
  q.i = i;
  const Block blk = greedy_block(profile, i);
  const BlockFate fate = block_fate(q, blk);
  if (!fate.survives)
    throw std::logic_error("nonvanishing_witness: greedy block failed to survive");
  return std::make_pair(q.z, blk);
}

ResDecision res_is_zero_for_all_z(const GroupProfile& profile, int i, int m, int n, int nprime) {
  require_admissible(profile, m, "res_is_zero_for_all_z");
  require_admissible(profile, n, "res_is_zero_for_all_z");
  require_admissible(profile, nprime, "res_is_zero_for_all_z");
  if (!(m <= n && n < nprime))
    throw std::invalid_argument("res_is_zero_for_all_z: levels must satisfy m <= n < n'");
  if (nprime < n + profile.e)
    throw std::invalid_argument(
        "res_is_zero_for_all_z: gap n' - n < e; the symbolic argument needs a full p-power "
        "step, smaller gaps are flagged for per-z evaluation, not guessed");
  if (i < 0) throw std::invalid_argument("res_is_zero_for_all_z: negative degree");

  const int I0 = i0(profile);
  const int d = top_dimension(profile);

  ResDecision out;
  if (i <= I0) {
    out.zero_for_all_z = false;
    out.witness = nonvanishing_witness(profile, i, m, n, nprime);
    out.certificate = {{"degree", i},
                       {"zero_for_all_z", false},
                       {"witness", witness_to_json(profile, *out.witness)}};
    return out;
  }

  out.zero_for_all_z = true;
  nlohmann::json classes = nlohmann::json::array();
  if (i > d) {
    classes.push_back({{"indices", "any"},
                       {"why", "degree exceeds the top dimension d = " + std::to_string(d) +
                                   "; no blocks exist at all"}});
  } else {
    classes.push_back(
        {{"indices", "b > 0"},
         {"killing_factor", "center"},
         {"why", "center levels max(m,n) -> max(m,n') deepen by at least e for every z; a "
                 "p-power step, so the restriction on the center factor is zero"}});
    classes.push_back(
        {{"indices", "some c_alpha > 0"},
         {"killing_factor", "the positive root factor carrying that index"},
         {"why", "positive-root levels are n + <z,alpha> -> n' + <z,alpha> for every dominant "
                 "z; the gap n' - n >= e is a p-power step"}});
    classes.push_back(
        {{"indices", "a only"},
         {"killing_factor", "none needed"},
         {"why", "the negative factors carry total dimension i0 = " + std::to_string(I0) +
                     " < " + std::to_string(i) + "; no block of this degree avoids b and c"}});
  }
  out.certificate = {{"degree", i}, {"zero_for_all_z", true}, {"m", m},
                     {"n", n},      {"nprime", nprime},       {"block_classes", classes}};
  return out;
}

VanishingTable vanishing_table(const GroupProfile& profile, int m, int ladder_len) {
  require_admissible(profile, m, "vanishing_table");
  if (ladder_len < 2) throw std::invalid_argument("vanishing_table: ladder needs >= 2 levels");

  VanishingTable table;
  table.profile = profile;
  table.m = m;
  table.i0_value = i0(profile);
  table.d_value = top_dimension(profile);
  for (int j = 0; j < ladder_len; ++j) table.ladder.push_back(m + j * profile.e);
  const int n_top = table.ladder.back();

  for (int i = 0; i <= table.d_value; ++i) {
    TableEntry entry;
    entry.i = i;
    entry.nonvanishing = (i <= table.i0_value);
    if (entry.nonvanishing) {
      // one witness deep enough for the whole ladder, verified on every rung
      const Cocharacter z = find_deep_dominant(table.profile, n_top - m);
      const Block blk = greedy_block(table.profile, i);
      for (std::size_t j = 0; j + 1 < table.ladder.size(); ++j) {
        TransitionQuery q;
        q.profile = &table.profile;
        q.m = m;
        q.n = table.ladder[j];
        q.nprime = table.ladder[j + 1];
        q.z = z;
        q.i = i;
        if (!block_fate(q, blk).survives)
          throw std::logic_error("vanishing_table: witness died on a ladder rung");
      }
      entry.witness = std::make_pair(z, blk);
    } else {
      entry.certificate =
          res_is_zero_for_all_z(table.profile, i, m, m, m + table.profile.e).certificate;
    }
    table.entries.push_back(std::move(entry));
  }
  return table;
}

VanishingTable ext_table(const GroupProfile& profile, int m, int ladder_len) {
  VanishingTable table = vanishing_table(profile, m, ladder_len);
  table.label = "ext";
  return table;
}

nlohmann::json table_to_json(const VanishingTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const TableEntry& entry : table.entries) {
    nlohmann::json j = {{"i", entry.i}, {"nonvanishing", entry.nonvanishing}};
    if (entry.witness)
      j["witness"] = witness_to_json(table.profile, *entry.witness);
    else
      j["certificate"] = entry.certificate;
    entries.push_back(std::move(j));
  }
  nlohmann::json out = {{"profile", profile_to_json(table.profile)},
                        {"m", table.m},
                        {"i0", table.i0_value},
                        {"d", table.d_value},
                        {"ladder", table.ladder}};
  out[table.label == "ext" ? "ext_table" : "table"] = std::move(entries);
  return out;
}

bool diagonal_vanishing(const GroupProfile& profile, int i, int n) {
  require_admissible(profile, n, "diagonal_vanishing");
  if (i < 0) throw std::invalid_argument("diagonal_vanishing: negative degree");

  // the engine's content: K_n n zK_nz^-1 maps onto the n+e shape by p-powers,
  // so every positive-degree block dies one step up the diagonal
  const FiltrationShape kn = congruence_shape(profile, n);
  const FiltrationShape kne = congruence_shape(profile, n + profile.e);
  std::vector<Cocharacter> samples = enumerate_dominant(profile, 4);
  samples.push_back(find_deep_dominant(profile, 2 * (n + profile.e)));
  for (const Cocharacter& z : samples) {
    const FiltrationShape lhs = p_power(intersect(kn, conjugate(kn, z)));
    const FiltrationShape rhs = intersect(kne, conjugate(kne, z));
    if (!lhs.same_levels(rhs))
      throw std::logic_error("diagonal_vanishing: p-power identity violated");
  }
  return i > 0;
}

StrictInclusion strict_inclusion_check(const GroupProfile& profile, int m, int n, int nprime) {
  require_admissible(profile, m, "strict_inclusion_check");
  require_admissible(profile, n, "strict_inclusion_check");
  require_admissible(profile, nprime, "strict_inclusion_check");
  if (!(m <= n && n < nprime))
    throw std::invalid_argument("strict_inclusion_check: levels must satisfy m <= n < n'");

  StrictInclusion out;
  if (profile.torus_rank >= 1) {
    out.strict = true;
    out.certificate = {{"factor", "center"},
                       {"source_level", std::max(m, n)},
                       {"target_level", std::max(m, nprime)},
                       {"why", "the center level deepens for every dominant z"}};
  } else if (profile.root_system.num_reduced() > 0) {
    out.strict = true;
    out.certificate = {{"factor", "positive root " + root_key(profile.root_system.reduced_pos(0))},
                       {"why", "positive-root levels n + <z,alpha> deepen to n' + <z,alpha> for "
                               "every dominant z"}};
  } else {
    out.strict = false;
    out.certificate = {{"why", "no Iwahori factors: the discrete case, both intersections "
                               "coincide"}};
  }
  return out;
}

} // namespace rind
