#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rind/transition.hpp"

using namespace rind;

namespace {

GroupProfile make_profile(const std::string& family, int rank, u64 p, int e, int f,
                          int torus_rank) {
  GroupProfile pr;
  pr.root_system = build_root_system(family, rank);
  pr.p = p;
  pr.e = e;
  pr.f = f;
  pr.torus_rank = torus_rank;
  return pr;
}

TransitionQuery make_query(const GroupProfile& pr, int m, int n, int nprime,
                           const Cocharacter& z, int i) {
  TransitionQuery q;
  q.profile = &pr;
  q.m = m;
  q.n = n;
  q.nprime = nprime;
  q.z = z;
  q.i = i;
  return q;
}

} // namespace

TEST_CASE("factor_rank extremes and the partial ramified step") {
  CHECK(factor_rank(3, 3, 1, 1, 1) == 1);
  CHECK(factor_rank(3, 3, 2, 2, 3) == 12);  // full rank delta*e*f
  CHECK(factor_rank(3, 4, 1, 1, 1) == 0);   // one full p-power step
  CHECK(factor_rank(2, 4, 1, 2, 1) == 0);
  CHECK(factor_rank(2, 3, 1, 2, 1) == 1);   // half step through a ramified lattice
  CHECK(factor_rank(2, 3, 2, 2, 2) == 4);
  CHECK(factor_rank(2, 9, 1, 2, 1) == 0);   // clamp below
  CHECK_THROWS_AS(factor_rank(3, 2, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("block_fate at z = 0, n' = n is the identity with full ranks") {
  const GroupProfile a2 = make_profile("A", 2, 3, 1, 1, 2);
  const FrattiniDims fd = profile_frattini_dims(a2);
  for (int i : {0, 1, 4}) {
    for (const Block& blk : blocks_of_degree(a2, i)) {
      const BlockFate fate = block_fate(make_query(a2, 2, 2, 2, Cocharacter{{0, 0}}, i), blk);
      CHECK(fate.survives);
      CHECK(fate.neg_ranks == fd.neg);
      CHECK(fate.center_rank == fd.center);
      CHECK(fate.pos_ranks == fd.pos);
    }
  }
}

TEST_CASE("a positive center index dies across one p-power step") {
  const GroupProfile a1 = make_profile("A", 1, 3, 1, 1, 1);
  Block blk = zero_block(a1);
  blk.b = 1;
  for (const Cocharacter& z : enumerate_dominant(a1, 3)) {
    const BlockFate fate = block_fate(make_query(a1, 1, 1, 2, z, 1), blk);
    CHECK(fate.center_rank == 0);
    CHECK_FALSE(fate.survives);
  }
}

TEST_CASE("a positive-root index dies across one p-power step for every dominant z") {
  const GroupProfile a2 = make_profile("A", 2, 3, 1, 1, 2);
  Block blk = zero_block(a2);
  blk.c[1] = 1;
  for (const Cocharacter& z : enumerate_dominant(a2, 3)) {
    const BlockFate fate = block_fate(make_query(a2, 1, 2, 3, z, 1), blk);
    CHECK(fate.pos_ranks[1] == 0);
    CHECK_FALSE(fate.survives);
  }
}

TEST_CASE("deep z pins negative factors at level m with full rank") {
  const GroupProfile a2 = make_profile("A", 2, 3, 1, 1, 2);
  const FrattiniDims fd = profile_frattini_dims(a2);
  const int m = 1, n = 2, nprime = 3;
  const Cocharacter z = find_deep_dominant(a2, nprime - m);
  Block blk = zero_block(a2);
  for (std::size_t j = 0; j < blk.a.size(); ++j) blk.a[j] = fd.neg[j];
  const BlockFate fate = block_fate(make_query(a2, m, n, nprime, z, blk.degree()), blk);
  CHECK(fate.survives);
  CHECK(fate.neg_ranks == fd.neg);
  CHECK(blk.degree() == i0(a2));
}

TEST_CASE("query validation rejects bad levels, non-dominant z, negative degree") {
  const GroupProfile a1 = make_profile("A", 1, 3, 1, 1, 1);
  const Block b0 = zero_block(a1);
  CHECK_THROWS_WITH_AS(block_fate(make_query(a1, 2, 1, 2, Cocharacter{{0}}, 0), b0),
                       doctest::Contains("m <= n <= n'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(block_fate(make_query(a1, 1, 1, 2, Cocharacter{{-1}}, 0), b0),
                       doctest::Contains("not dominant"), std::invalid_argument);
  const GroupProfile two = make_profile("A", 1, 2, 1, 1, 1);
  CHECK_THROWS_WITH_AS(block_fate(make_query(two, 1, 2, 3, Cocharacter{{0}}, 0), zero_block(two)),
                       doctest::Contains("m ∈ eℕ"), std::invalid_argument);
  const GroupProfile ram = make_profile("A", 1, 3, 2, 1, 1);
  CHECK_THROWS_AS(block_fate(make_query(ram, 2, 3, 4, Cocharacter{{0}}, 0), zero_block(ram)),
                  std::invalid_argument);
  CHECK_THROWS_AS(block_fate(make_query(a1, 1, 1, 2, Cocharacter{{0}}, 1), b0),
                  std::invalid_argument);  // degree mismatch
}

TEST_CASE("death is monotone in the target level") {
  const GroupProfile a2 = make_profile("A", 2, 3, 1, 1, 2);
  const int n = 2;
  for (const Cocharacter& z : enumerate_dominant(a2, 2)) {
    for (int i : {1, 3, 5}) {
      for (const Block& blk : blocks_of_degree(a2, i)) {
        const bool far = block_fate(make_query(a2, 1, n, n + 2, z, i), blk).survives;
        const bool near = block_fate(make_query(a2, 1, n, n + 1, z, i), blk).survives;
        if (far) CHECK(near);  // dies near => dies far
      }
    }
  }
}

TEST_CASE("res_is_zero_for_all_z splits exactly at i0") {
  const GroupProfile c2 = make_profile("C", 2, 3, 1, 1, 2);
  const int I0 = i0(c2);  // 4
  const int d = top_dimension(c2);

  const ResDecision below = res_is_zero_for_all_z(c2, I0, 1, 1, 2);
  CHECK_FALSE(below.zero_for_all_z);
  REQUIRE(below.witness.has_value());
  CHECK(below.certificate["zero_for_all_z"] == false);

  const ResDecision above = res_is_zero_for_all_z(c2, I0 + 1, 1, 1, 2);
  CHECK(above.zero_for_all_z);
  CHECK_FALSE(above.witness.has_value());
  CHECK(above.certificate["block_classes"].size() == 3);

  const ResDecision vacuous = res_is_zero_for_all_z(c2, d + 5, 1, 1, 2);
  CHECK(vacuous.zero_for_all_z);
  CHECK(vacuous.certificate["block_classes"].size() == 1);

  CHECK_THROWS_WITH_AS(res_is_zero_for_all_z(c2, 2, 1, 2, 2),
                       doctest::Contains("m <= n < n'"), std::invalid_argument);
}

TEST_CASE("nonvanishing witnesses: empty block at degree 0, greedy fill above") {
  const GroupProfile a1 = make_profile("A", 1, 3, 1, 1, 1);
  const auto w0 = nonvanishing_witness(a1, 0, 1, 1, 2);
  REQUIRE(w0.has_value());
  CHECK(w0->second == zero_block(a1));
  CHECK(pairing(w0->first, a1.root_system.positive_roots[0]) >= 1);

  const auto w1 = nonvanishing_witness(a1, 1, 1, 1, 2);
  REQUIRE(w1.has_value());
  CHECK(w1->second.a == std::vector<int>{1});

  const GroupProfile a2 = make_profile("A", 2, 3, 1, 1, 2);
  const auto w2 = nonvanishing_witness(a2, 2, 1, 1, 2);
  REQUIRE(w2.has_value());
  CHECK(w2->second.a == std::vector<int>{1, 1, 0});  // greedy along the fixed listing
  CHECK(w2->second.b == 0);

  CHECK_FALSE(nonvanishing_witness(a2, i0(a2) + 1, 1, 1, 2).has_value());
  CHECK_THROWS_AS(nonvanishing_witness(a2, top_dimension(a2) + 1, 1, 1, 2),
                  std::invalid_argument);
}

TEST_CASE("witnesses are deterministic") {
  const GroupProfile g2 = make_profile("G", 2, 5, 1, 1, 2);
  const auto w1 = nonvanishing_witness(g2, 4, 1, 2, 3);
  const auto w2 = nonvanishing_witness(g2, 4, 1, 2, 3);
  REQUIRE(w1.has_value());
  CHECK(w1->first == w2->first);
  CHECK(w1->second == w2->second);
}

TEST_CASE("vanishing table for A1 over Q3 is (T, T, F, F)") {
  const GroupProfile a1 = make_profile("A", 1, 3, 1, 1, 1);
  const VanishingTable t = vanishing_table(a1, 1);
  CHECK(t.i0_value == 1);
  CHECK(t.d_value == 3);
  CHECK(t.ladder == std::vector<int>{1, 2, 3});
  REQUIRE(t.entries.size() == 4);
  const std::vector<bool> expected{true, true, false, false};
  for (int i = 0; i <= 3; ++i) {
    CHECK(t.entries[i].nonvanishing == expected[i]);
    if (expected[i]) {
      CHECK(t.entries[i].witness.has_value());
    } else {
      CHECK_FALSE(t.entries[i].witness.has_value());
      CHECK(t.entries[i].certificate["zero_for_all_z"] == true);
    }
  }
}

TEST_CASE("vanishing table thresholds match i0 across families") {
  for (auto [fam, rank, e, f] : {std::tuple<const char*, int, int, int>{"A", 2, 1, 2},
                                 {"C", 2, 2, 1}, {"G", 2, 1, 1}, {"BC", 1, 1, 1}}) {
    const GroupProfile pr = make_profile(fam, rank, 3, e, f, rank);
    const VanishingTable t = vanishing_table(pr, 2 * e);
    REQUIRE(static_cast<int>(t.entries.size()) == t.d_value + 1);
    for (const TableEntry& entry : t.entries)
      CHECK(entry.nonvanishing == (entry.i <= t.i0_value));
    CHECK_FALSE(t.entries.back().nonvanishing);  // degree d always vanishes
  }
}

TEST_CASE("vanishing table rejects inadmissible m by naming the condition") {
  const GroupProfile two = make_profile("A", 1, 2, 1, 1, 1);
  CHECK_THROWS_WITH_AS(vanishing_table(two, 1), doctest::Contains("m ∈ eℕ, and m > e if p = 2"),
                       std::invalid_argument);
  const GroupProfile ram = make_profile("A", 1, 3, 2, 1, 1);
  CHECK_THROWS_WITH_AS(vanishing_table(ram, 3), doctest::Contains("m ∈ eℕ"),
                       std::invalid_argument);
}

TEST_CASE("ext table carries identical entries under the ext label") {
  const GroupProfile a2 = make_profile("A", 2, 3, 1, 1, 2);
  const VanishingTable van = vanishing_table(a2, 2);
  const VanishingTable ext = ext_table(a2, 2);
  CHECK(ext.label == "ext");
  REQUIRE(van.entries.size() == ext.entries.size());
  for (std::size_t i = 0; i < van.entries.size(); ++i) {
    CHECK(van.entries[i].nonvanishing == ext.entries[i].nonvanishing);
    CHECK(van.entries[i].witness == ext.entries[i].witness);
    CHECK(van.entries[i].certificate == ext.entries[i].certificate);
  }
  CHECK(table_to_json(van).contains("table"));
  CHECK(table_to_json(ext).contains("ext_table"));
  CHECK(table_to_json(van)["table"] == table_to_json(ext)["ext_table"]);
}

TEST_CASE("table JSON carries witnesses for true entries and certificates for false ones") {
  const GroupProfile a1 = make_profile("A", 1, 5, 1, 1, 1);
  const nlohmann::json j = table_to_json(vanishing_table(a1, 2));
  CHECK(j["i0"] == 1);
  CHECK(j["d"] == 3);
  REQUIRE(j["table"].size() == 4);
  CHECK(j["table"][0].contains("witness"));
  CHECK(j["table"][1]["witness"].contains("z"));
  CHECK(j["table"][1]["witness"].contains("block"));
  CHECK(j["table"][2].contains("certificate"));
  CHECK_FALSE(j["table"][2].contains("witness"));
}

TEST_CASE("diagonal vanishing holds in every positive degree and fails at zero") {
  for (auto [fam, rank, e, f] : {std::tuple<const char*, int, int, int>{"A", 1, 1, 1},
                                 {"A", 2, 1, 2}, {"C", 2, 2, 1}}) {
    const GroupProfile pr = make_profile(fam, rank, 3, e, f, rank);
    const int d = top_dimension(pr);
    CHECK_FALSE(diagonal_vanishing(pr, 0, 2 * e));
    CHECK(diagonal_vanishing(pr, 1, 2 * e));
    CHECK(diagonal_vanishing(pr, d, 2 * e));
  }
  const GroupProfile two = make_profile("A", 1, 2, 1, 1, 1);
  CHECK_THROWS_AS(diagonal_vanishing(two, 1, 1), std::invalid_argument);
}

TEST_CASE("strict inclusion certified through the center, false only when degenerate") {
  const GroupProfile a2 = make_profile("A", 2, 3, 1, 1, 2);
  const StrictInclusion si = strict_inclusion_check(a2, 1, 1, 2);
  CHECK(si.strict);
  CHECK(si.certificate["factor"] == "center");
  CHECK(si.certificate["target_level"] == 2);

  GroupProfile degenerate;
  degenerate.root_system.family = "empty";
  degenerate.root_system.rank = 0;
  degenerate.p = 3;
  degenerate.torus_rank = 0;
  const StrictInclusion none = strict_inclusion_check(degenerate, 1, 1, 2);
  CHECK_FALSE(none.strict);

  CHECK_THROWS_AS(strict_inclusion_check(a2, 1, 2, 2), std::invalid_argument);
}
