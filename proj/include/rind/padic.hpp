#ifndef RIND_PADIC_HPP
#define RIND_PADIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rind/numutil.hpp"

namespace rind {

/*
  Bounded-precision p-adic matrix arithmetic.

  A matrix holds integer entries known modulo p^precision; the modulus always
  fits in 64 bits (precision <= max_precision(p), chosen so sums of two
  residues cannot overflow). Non-integral intermediate values never appear:
  dividing by p^k is an explicit step that checks divisibility and gives up k
  digits of absolute precision, dividing by a unit is a modular inverse and
  costs nothing. Series evaluation therefore reports exactly how many digits
  survive: working precision minus the factorial (resp. index) valuation spent
  by the worst term, capped by the tail bound of the truncation index.
*/

int max_precision(u64 p);

struct PadicMatrix {
  u64 p = 3;
  int size = 1;
  int precision = 1;          // entries exact modulo p^precision
  std::vector<u64> entries;   // row-major, canonical residues

  static PadicMatrix zero(u64 p, int size, int precision);
  static PadicMatrix identity(u64 p, int size, int precision);

  u64 modulus() const;
  u64& at(int i, int j) { return entries[static_cast<std::size_t>(i) * size + j]; }
  u64 at(int i, int j) const { return entries[static_cast<std::size_t>(i) * size + j]; }

  PadicMatrix reduced_to(int new_precision) const;
  // min entry valuation, capped at precision (zero matrix reports precision)
  int min_valuation() const;
  bool is_zero() const;
};

PadicMatrix add(const PadicMatrix& a, const PadicMatrix& b);
PadicMatrix sub(const PadicMatrix& a, const PadicMatrix& b);
PadicMatrix mul(const PadicMatrix& a, const PadicMatrix& b);
PadicMatrix sub_identity(const PadicMatrix& g);   // g - 1
PadicMatrix add_identity(const PadicMatrix& x);   // 1 + x

// entries must all be divisible by p^k; costs k digits of precision
PadicMatrix divide_by_p_power(const PadicMatrix& a, int k);
PadicMatrix scalar_mul(const PadicMatrix& a, u64 unit);  // unit must be prime to p

// g^k with non-negative k, exact at g's precision
PadicMatrix pow_int(const PadicMatrix& g, u64 k);

// inverse of g in 1 + p A0 (Neumann series) or of a unit matrix (Gauss-Jordan)
PadicMatrix invert_principal_unit(const PadicMatrix& g);
PadicMatrix invert_unit_matrix(const PadicMatrix& a);

int v0_of(u64 p);           // 1 for p > 2, 2 for p = 2
u64 wp_of(u64 p);           // p for p > 2, 4 for p = 2

// truncation index, working precision and guaranteed digits for one series
struct SeriesPlan {
  int terms = 0;            // evaluate n = 1..terms
  int working = 0;          // evaluate modulo p^working
  int certified = 0;        // digits guaranteed by loss + tail accounting
};

SeriesPlan plan_exp(u64 p, int target);
SeriesPlan plan_log(u64 p, int target);

// exp: requires min valuation >= v0; result precision = certified digits
PadicMatrix exp_matrix(const PadicMatrix& x, int target_precision);
// log: requires val(u - 1) >= v0
PadicMatrix log_matrix(const PadicMatrix& u, int target_precision);

struct CongruenceLevelSpec {
  int n_size = 2;
  u64 p = 3;
  int level = 1;  // ker(GL_n(Z_p) -> GL_n(Z/p^level))
};

bool in_congruence_level(const PadicMatrix& g, const CongruenceLevelSpec& spec);

// outcome of one verified comparison: the residual of two independently
// computed routes, measured at the precision both routes certify
struct CheckOutcome {
  bool holds = false;
  int certified_precision = 0;
  int residual_valuation = 0;  // = certified_precision when the residual vanishes
  std::string note;            // failure diagnostics, counterexample flags
};

// log(a^-1 u a) vs a^-1 log(u) a, with a a unit matrix
CheckOutcome conjugation_log_identity(const PadicMatrix& a_unit, const PadicMatrix& u,
                                      int target_precision);
// same, with a = diag(p^{v_0}, ..., p^{v_{n-1}})
CheckOutcome conjugation_log_identity_diag(const std::vector<int>& diag_exponents,
                                           const PadicMatrix& u, int target_precision);

// kappa = exp(log([x,y]) / wp); verifies kappa^wp = [x,y] and kappa in the
// level-m subgroup; refuses the division when log([x,y]) is not in wp*A0
CheckOutcome commutator_power_check(const PadicMatrix& x, const PadicMatrix& y, int level,
                                    int target_precision);

// both directions of K_m^p = K_{m+1} over Z_p at one sampled element
CheckOutcome lower_p_series_forward(const PadicMatrix& g, int level, int target_precision);
CheckOutcome lower_p_series_root(const PadicMatrix& h, int level, int target_precision);

// commutator extraction inside a^-1 K' a n K for diagonal p-power a
CheckOutcome intersection_uniform_pair(const PadicMatrix& x, const PadicMatrix& y,
                                       const CongruenceLevelSpec& k_spec,
                                       const CongruenceLevelSpec& kprime_spec,
                                       const std::vector<int>& diag_exponents,
                                       int target_precision);

// deterministic sampling: entries uniform at the required valuation floor
PadicMatrix sample_at_level(std::mt19937_64& eng, u64 p, int size, int level, int precision);
// element of a^-1 K' a n K for diagonal p-power a, via per-entry floors
PadicMatrix sample_intersection_element(std::mt19937_64& eng, const CongruenceLevelSpec& k_spec,
                                        const CongruenceLevelSpec& kprime_spec,
                                        const std::vector<int>& diag_exponents, int precision);

struct UniformCheckConfig {
  u64 p = 3;
  int size = 2;
  int level = 1;      // bumped to v0 internally when too shallow
  int samples = 100;
  int precision = 12; // target N
  u64 seed = 1;
  int floor_slack = 3;  // pass needs certified >= precision - floor_slack
};

struct CheckStats {
  std::string name;
  int samples = 0;
  int failures = 0;
  int worst_certified = 1 << 20;
  int worst_residual = 1 << 20;
  std::vector<std::string> notes;
};

struct UniformSuiteReport {
  UniformCheckConfig config;
  std::vector<CheckStats> checks;
  bool pass = false;
};

// the four lemma checks plus the intersection check, seeded and deterministic
UniformSuiteReport run_uniform_suite(const UniformCheckConfig& config);
nlohmann::json uniform_report_to_json(const UniformSuiteReport& report);

} // namespace rind

#endif
