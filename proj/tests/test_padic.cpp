#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rind/padic.hpp"

#include <string>

using namespace rind;

namespace {

PadicMatrix scalar(u64 p, int precision, u64 value) {
  PadicMatrix m = PadicMatrix::zero(p, 1, precision);
  m.at(0, 0) = value % m.modulus();
  return m;
}

} // namespace

TEST_CASE("max precision fits the word size") {
  CHECK(max_precision(2) == 62);
  CHECK(max_precision(3) == 39);
  CHECK(max_precision(5) == 26);
  CHECK(max_precision(7) == 22);
}

TEST_CASE("canonical residue arithmetic round trips") {
  PadicMatrix a = PadicMatrix::identity(3, 2, 5);
  a.at(0, 1) = 9;
  a.at(1, 0) = 27;
  CHECK(a.modulus() == 243);
  CHECK(sub_identity(a).min_valuation() == 2);
  CHECK(add(a, sub(PadicMatrix::zero(3, 2, 5), a)).is_zero());

  PadicMatrix shallow = a.reduced_to(2);
  CHECK(shallow.modulus() == 9);
  CHECK(shallow.at(0, 1) == 0);
  CHECK_THROWS_AS(shallow.reduced_to(4), std::invalid_argument);

  PadicMatrix d = divide_by_p_power(sub_identity(a), 2);
  CHECK(d.precision == 3);
  CHECK(d.at(0, 1) == 1);
  CHECK(d.at(1, 0) == 3);
  CHECK_THROWS_AS(divide_by_p_power(a, 1), std::domain_error);
  CHECK_THROWS_AS(divide_by_p_power(sub_identity(a), 5), std::domain_error);

  CHECK(scalar_mul(scalar(5, 4, 7), 2).at(0, 0) == 14);
  CHECK(pow_int(scalar(5, 4, 2), 10).at(0, 0) == 1024 % 625);
}

TEST_CASE("group inverses are exact at the working precision") {
  PadicMatrix g = PadicMatrix::identity(3, 3, 7);
  g.at(0, 1) = 3;
  g.at(1, 2) = 6;
  g.at(2, 0) = 12;
  PadicMatrix ginv = invert_principal_unit(g);
  CHECK(mul(g, ginv).entries == PadicMatrix::identity(3, 3, 7).entries);
  CHECK(mul(ginv, g).entries == PadicMatrix::identity(3, 3, 7).entries);

  PadicMatrix a = PadicMatrix::identity(5, 2, 6);
  a.at(0, 0) = 2;
  a.at(0, 1) = 3;
  a.at(1, 0) = 4;
  a.at(1, 1) = 12;  // det = 12, a unit mod 5
  PadicMatrix ainv = invert_unit_matrix(a);
  CHECK(mul(a, ainv).entries == PadicMatrix::identity(5, 2, 6).entries);

  PadicMatrix unit = PadicMatrix::identity(3, 2, 4);
  unit.at(0, 0) = 2;
  CHECK_THROWS_AS(invert_principal_unit(unit), std::domain_error);
  PadicMatrix sing = PadicMatrix::zero(3, 2, 4);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 1;
  sing.at(1, 0) = 1;
  sing.at(1, 1) = 1;
  CHECK_THROWS_AS(invert_unit_matrix(sing), std::domain_error);
}

TEST_CASE("series plans certify the target") {
  SeriesPlan pe = plan_exp(5, 4);
  CHECK(pe.terms == 4);
  CHECK(pe.working == 4);
  CHECK(pe.certified == 4);

  SeriesPlan pl = plan_log(3, 4);
  CHECK(pl.terms == 4);
  CHECK(pl.working == 5);
  CHECK(pl.certified == 4);

  SeriesPlan pe2 = plan_exp(2, 12);
  CHECK(pe2.terms == 10);
  CHECK(pe2.working == 12 + 8);

  // p = 2 burns a digit per factor of 2 in t!, the word size runs out
  CHECK_THROWS_AS(plan_exp(2, 60), std::domain_error);
}

TEST_CASE("scalar exponential matches hand computation") {
  // exp(5) = 1 + 5 + 25/2 + 125/6 + ... summed as exact p-adic residues
  CHECK(exp_matrix(scalar(5, 10, 5), 4).at(0, 0) == 456);
  CHECK(exp_matrix(scalar(5, 10, 5), 6).at(0, 0) == 6081);
  CHECK(exp_matrix(scalar(5, 10, 5), 6).precision == 6);
  // p = 2 needs val >= 2: exp(4) = 1 + 4 + 8 + 32/3 + 32/3 + ...
  CHECK(exp_matrix(scalar(2, 20, 4), 6).at(0, 0) == 13);
}

TEST_CASE("scalar logarithm matches hand computation") {
  // log(4) = 3 - 9/2 + 27/3 - 81/4 + ...
  CHECK(log_matrix(scalar(3, 10, 4), 4).at(0, 0) == 48);
  CHECK(log_matrix(scalar(3, 10, 4), 5).at(0, 0) == 48);
  // log(5) = 4 - 16/2 + 64/3 - ... = -4 mod 64
  CHECK(log_matrix(scalar(2, 20, 5), 6).at(0, 0) == 60);
}

TEST_CASE("matrix exponential agrees with the nilpotent closed form") {
  PadicMatrix x = PadicMatrix::zero(3, 3, 12);
  x.at(0, 1) = 3;
  x.at(0, 2) = 3;
  x.at(1, 2) = 3;
  PadicMatrix u = exp_matrix(x, 6);
  CHECK(u.precision == 6);
  // X^3 = 0, so exp(X) = 1 + X + X^2/2 exactly; (0,2) entry is 3 + 9/2
  CHECK(u.at(0, 0) == 1);
  CHECK(u.at(0, 1) == 3);
  CHECK(u.at(0, 2) == 372);
  CHECK(u.at(1, 2) == 3);
  CHECK(u.at(1, 0) == 0);
  CHECK(u.at(2, 2) == 1);

  PadicMatrix back = log_matrix(u, 6);
  CHECK(back.entries == x.reduced_to(back.precision).entries);
}

TEST_CASE("exp and log invert each other on random samples") {
  for (u64 p : {u64{3}, u64{5}, u64{2}}) {
    std::mt19937_64 eng(mix_seed(17, p));
    const int v0 = v0_of(p);
    const int target = 10;
    const int working = std::max(plan_exp(p, target).working, plan_log(p, target).working) + 2;
    for (int s = 0; s < 20; ++s) {
      PadicMatrix g = sample_at_level(eng, p, 2, v0, working);
      PadicMatrix x = sub_identity(g);
      PadicMatrix u = exp_matrix(x, target);
      PadicMatrix lx = log_matrix(u, target);
      CHECK(lx.entries == x.reduced_to(lx.precision).entries);
      PadicMatrix round = exp_matrix(log_matrix(g, target), target);
      CHECK(round.entries == g.reduced_to(round.precision).entries);
      // exp and log preserve the leading valuation
      CHECK(log_matrix(g, target).min_valuation() ==
            std::min(sub_identity(g).min_valuation(), target));
      CHECK(sub_identity(u).min_valuation() == std::min(x.min_valuation(), target));
    }
  }
}

TEST_CASE("exponential of p times x is the p-th power") {
  for (u64 p : {u64{3}, u64{5}}) {
    std::mt19937_64 eng(mix_seed(23, p));
    const int target = 9;
    const int working = plan_exp(p, target).working + 4;
    for (int s = 0; s < 12; ++s) {
      PadicMatrix g = sample_at_level(eng, p, 3, 1, working);
      PadicMatrix x = sub_identity(g);
      PadicMatrix px = x;
      for (u64& e : px.entries) e = detail::mulmod(e, p, px.modulus());
      PadicMatrix lhs = exp_matrix(px, target);
      PadicMatrix rhs = pow_int(exp_matrix(x, target), p);
      CHECK(sub(lhs, rhs).is_zero());
    }
  }
}

TEST_CASE("convergence preconditions are enforced") {
  PadicMatrix unitval = scalar(3, 8, 2);
  CHECK_THROWS_AS(exp_matrix(unitval, 4), std::domain_error);
  CHECK_THROWS_AS(log_matrix(scalar(3, 8, 2), 4), std::domain_error);
  // p = 2 demands valuation >= 2, a 2-divisible entry is not enough
  CHECK_THROWS_AS(exp_matrix(scalar(2, 20, 2), 4), std::domain_error);
  CHECK_THROWS_AS(log_matrix(scalar(2, 20, 3), 4), std::domain_error);
  CHECK_THROWS_AS(exp_matrix(scalar(3, 1, 3), 4), std::domain_error);
}

TEST_CASE("conjugation identity holds for unit and diagonal conjugators") {
  for (u64 p : {u64{3}, u64{5}, u64{2}}) {
    std::mt19937_64 eng(mix_seed(31, p));
    const int v0 = v0_of(p);
    const int target = 12;
    const int working =
        std::max(plan_exp(p, target).working, plan_log(p, target).working) + 4;
    for (int s = 0; s < 10; ++s) {
      PadicMatrix u = sample_at_level(eng, p, 2, v0 + 1, working);
      PadicMatrix a = sample_at_level(eng, p, 2, 1, working);
      CheckOutcome unit_case = conjugation_log_identity(a, u, target);
      CHECK(unit_case.holds);
      CHECK(unit_case.certified_precision >= target);
      CheckOutcome diag_case = conjugation_log_identity_diag({0, 1}, u, target);
      CHECK(diag_case.holds);
      CHECK(diag_case.certified_precision >= target - 1);
    }
  }
}

TEST_CASE("commutator power extraction certifies kappa") {
  for (u64 p : {u64{3}, u64{5}, u64{2}}) {
    std::mt19937_64 eng(mix_seed(41, p));
    const int level = v0_of(p);
    const int target = 12;
    const int working =
        std::max(plan_exp(p, target + 2).working, plan_log(p, target + 2).working) + 4;
    for (int s = 0; s < 10; ++s) {
      PadicMatrix x = sample_at_level(eng, p, 2, level, working);
      PadicMatrix y = sample_at_level(eng, p, 2, level, working);
      CheckOutcome out = commutator_power_check(x, y, level, target);
      CHECK(out.holds);
      CHECK(out.certified_precision >= target - 2);
      // commuting pair: the commutator is the identity and kappa = 1
      CheckOutcome trivial = commutator_power_check(x, mul(x, x), level, target);
      CHECK(trivial.holds);
    }
  }
}

TEST_CASE("shallow p=2 commutators are flagged, not divided") {
  // level 1 sits below the admissible bound for p = 2; here log([x,y]) can
  // have valuation 2 < val(4) + v0, and the division must be refused
  PadicMatrix x = PadicMatrix::identity(2, 2, 20);
  x.at(0, 1) = 2;
  PadicMatrix y = PadicMatrix::identity(2, 2, 20);
  y.at(1, 0) = 2;
  CheckOutcome out = commutator_power_check(x, y, 1, 10);
  CHECK_FALSE(out.holds);
  CHECK(out.note.find("counterexample candidate") != std::string::npos);
}

TEST_CASE("lower p series holds in both directions") {
  for (u64 p : {u64{3}, u64{2}}) {
    std::mt19937_64 eng(mix_seed(59, p));
    const int level = v0_of(p);
    const int target = 12;
    const int working =
        std::max(plan_exp(p, target + 2).working, plan_log(p, target + 2).working) + 4;
    for (int s = 0; s < 10; ++s) {
      PadicMatrix g = sample_at_level(eng, p, 2, level, working);
      CheckOutcome fwd = lower_p_series_forward(g, level, target);
      CHECK(fwd.holds);
      CHECK(fwd.residual_valuation >= level + 1);
      PadicMatrix h = sample_at_level(eng, p, 2, level + 1, working);
      CheckOutcome root = lower_p_series_root(h, level, target);
      CHECK(root.holds);
    }
  }
}

TEST_CASE("intersection sampling respects the valuation floors") {
  std::mt19937_64 eng(mix_seed(61, 3));
  CongruenceLevelSpec k{2, 3, 1};
  const std::vector<int> a_exps{0, 1};  // a = diag(1, 3)
  const int working = 20;
  for (int s = 0; s < 25; ++s) {
    PadicMatrix g = sample_intersection_element(eng, k, k, a_exps, working);
    CHECK(in_congruence_level(g, k));
    // upper-right corner must sink one level deeper than the rest
    CHECK(detail::valp(sub_identity(g).at(0, 1), 3) >= 2);
  }
}

TEST_CASE("intersection pairs certify kappa in both groups") {
  for (u64 p : {u64{3}, u64{5}, u64{2}}) {
    std::mt19937_64 eng(mix_seed(67, p));
    const int level = v0_of(p);
    const int target = 12;
    const int working =
        std::max(plan_exp(p, target + 2).working, plan_log(p, target + 2).working) + 4;
    CongruenceLevelSpec k{2, p, level};
    const std::vector<int> a_exps{0, p == 2 ? 2 : 1};
    for (int s = 0; s < 8; ++s) {
      PadicMatrix x = sample_intersection_element(eng, k, k, a_exps, working);
      PadicMatrix y = sample_intersection_element(eng, k, k, a_exps, working);
      CheckOutcome out = intersection_uniform_pair(x, y, k, k, a_exps, target);
      CHECK(out.holds);
      CHECK(out.certified_precision >= target - 2);
    }
  }
}

TEST_CASE("uniform suite passes with certified slack") {
  for (const auto& [p, size, level, samples] :
       {std::tuple<u64, int, int, int>{3, 2, 1, 25}, {5, 3, 1, 10}, {2, 2, 2, 15}}) {
    UniformCheckConfig cfg;
    cfg.p = p;
    cfg.size = size;
    cfg.level = level;
    cfg.samples = samples;
    cfg.precision = 12;
    cfg.seed = 2024;
    UniformSuiteReport report = run_uniform_suite(cfg);
    CHECK(report.pass);
    REQUIRE(report.checks.size() == 5);
    for (const CheckStats& stats : report.checks) {
      CHECK(stats.samples == samples);
      CHECK(stats.failures == 0);
      CHECK(stats.worst_certified >= cfg.precision - cfg.floor_slack);
    }
  }
}

TEST_CASE("uniform suite report is deterministic and well formed") {
  UniformCheckConfig cfg;
  cfg.p = 3;
  cfg.size = 2;
  cfg.level = 1;
  cfg.samples = 12;
  cfg.precision = 12;
  cfg.seed = 99;
  const std::string once = uniform_report_to_json(run_uniform_suite(cfg)).dump(2);
  const std::string twice = uniform_report_to_json(run_uniform_suite(cfg)).dump(2);
  CHECK(once == twice);

  nlohmann::json j = uniform_report_to_json(run_uniform_suite(cfg));
  CHECK(j["pass"].get<bool>());
  CHECK(j["p"] == 3);
  for (const char* name : {"exp_log_round_trip", "conjugation_log_identity",
                           "commutator_power", "lower_p_series", "intersection_uniform"}) {
    REQUIRE(j["checks"].contains(name));
    CHECK(j["checks"][name]["failures"] == 0);
  }

  // p = 2 reports the effective level after the v0 bump
  UniformCheckConfig cfg2 = cfg;
  cfg2.p = 2;
  cfg2.samples = 4;
  CHECK(uniform_report_to_json(run_uniform_suite(cfg2))["level"] == 2);
}
