#include "rind/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace rind {

using detail::invmod;
using detail::mulmod;
using detail::valp;
using detail::valp_factorial;

int max_precision(u64 p) {
  // largest W with p^W <= 2^62, so residue sums never overflow
  const u64 cap = u64{1} << 62;
  int w = 0;
  u64 m = 1;
  while (m <= cap / p) {
    m *= p;
    ++w;
  }
  return w;
}

int v0_of(u64 p) { return p == 2 ? 2 : 1; }
u64 wp_of(u64 p) { return p == 2 ? 4 : p; }

namespace {

u64 pow_u64(u64 p, int k) {
  u64 m = 1;
  while (k-- > 0) m *= p;
  return m;
}

void check_compatible(const PadicMatrix& a, const PadicMatrix& b, const char* op) {
  if (a.p != b.p || a.size != b.size)
    throw std::invalid_argument(std::string(op) + ": mismatched prime or size");
}

} // namespace

PadicMatrix PadicMatrix::zero(u64 p, int size, int precision) {
  if (size < 1) throw std::invalid_argument("PadicMatrix: size must be >= 1");
  if (precision < 1 || precision > max_precision(p))
    throw std::invalid_argument("PadicMatrix: precision out of range for this prime");
  PadicMatrix m;
  m.p = p;
  m.size = size;
  m.precision = precision;
  m.entries.assign(static_cast<std::size_t>(size) * size, 0);
  return m;
}

PadicMatrix PadicMatrix::identity(u64 p, int size, int precision) {
  PadicMatrix m = zero(p, size, precision);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

u64 PadicMatrix::modulus() const { return pow_u64(p, precision); }

PadicMatrix PadicMatrix::reduced_to(int new_precision) const {
  if (new_precision > precision)
    throw std::invalid_argument("reduced_to: cannot gain precision");
  if (new_precision < 1) throw std::invalid_argument("reduced_to: precision must stay >= 1");
  PadicMatrix m = *this;
  m.precision = new_precision;
  const u64 mod = m.modulus();
  for (u64& x : m.entries) x %= mod;
  return m;
}

int PadicMatrix::min_valuation() const {
  int v = precision;
  for (u64 x : entries) {
    if (x == 0) continue;
    v = std::min(v, valp(x, p));
  }
  return v;
}

bool PadicMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](u64 x) { return x == 0; });
}

PadicMatrix add(const PadicMatrix& a, const PadicMatrix& b) {
  check_compatible(a, b, "add");
  PadicMatrix r = a.precision <= b.precision ? a : b.reduced_to(a.precision);
  const PadicMatrix& o = a.precision <= b.precision ? b : a;
  const u64 mod = r.modulus();
  for (std::size_t k = 0; k < r.entries.size(); ++k)
    r.entries[k] = (r.entries[k] + o.entries[k] % mod) % mod;
  return r;
}

PadicMatrix sub(const PadicMatrix& a, const PadicMatrix& b) {
  check_compatible(a, b, "sub");
  const int prec = std::min(a.precision, b.precision);
  PadicMatrix r = a.reduced_to(prec);
  const u64 mod = r.modulus();
  for (std::size_t k = 0; k < r.entries.size(); ++k)
    r.entries[k] = (r.entries[k] + mod - b.entries[k] % mod) % mod;
  return r;
}

PadicMatrix mul(const PadicMatrix& a, const PadicMatrix& b) {
  check_compatible(a, b, "mul");
  const int prec = std::min(a.precision, b.precision);
  PadicMatrix r = PadicMatrix::zero(a.p, a.size, prec);
  const u64 mod = r.modulus();
  for (int i = 0; i < a.size; ++i)
    for (int k = 0; k < a.size; ++k) {
      const u64 aik = a.at(i, k) % mod;
      if (aik == 0) continue;
      for (int j = 0; j < a.size; ++j)
        r.at(i, j) = (r.at(i, j) + mulmod(aik, b.at(k, j) % mod, mod)) % mod;
    }
  return r;
}

PadicMatrix sub_identity(const PadicMatrix& g) {
  PadicMatrix r = g;
  const u64 mod = r.modulus();
  for (int i = 0; i < r.size; ++i) r.at(i, i) = (r.at(i, i) + mod - 1) % mod;
  return r;
}

PadicMatrix add_identity(const PadicMatrix& x) {
  PadicMatrix r = x;
  const u64 mod = r.modulus();
  for (int i = 0; i < r.size; ++i) r.at(i, i) = (r.at(i, i) + 1) % mod;
  return r;
}

PadicMatrix divide_by_p_power(const PadicMatrix& a, int k) {
  if (k == 0) return a;
  if (k < 0 || k >= a.precision)
    throw std::domain_error("divide_by_p_power: precision exhausted");
  const u64 pk = pow_u64(a.p, k);
  PadicMatrix r = a;
  for (u64& x : r.entries) {
    if (x % pk != 0)
      throw std::domain_error("divide_by_p_power: entry not divisible, valuation too low");
    x /= pk;
  }
  r.precision = a.precision - k;
  const u64 mod = r.modulus();
  for (u64& x : r.entries) x %= mod;
  return r;
}

PadicMatrix scalar_mul(const PadicMatrix& a, u64 unit) {
  PadicMatrix r = a;
  const u64 mod = r.modulus();
  for (u64& x : r.entries) x = mulmod(x, unit % mod, mod);
  return r;
}

PadicMatrix pow_int(const PadicMatrix& g, u64 k) {
  PadicMatrix r = PadicMatrix::identity(g.p, g.size, g.precision);
  PadicMatrix base = g;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

PadicMatrix invert_principal_unit(const PadicMatrix& g) {
  PadicMatrix y = sub_identity(g);
  if (y.min_valuation() < 1)
    throw std::domain_error("invert_principal_unit: not congruent to 1 mod p");
  PadicMatrix r = PadicMatrix::identity(g.p, g.size, g.precision);
  PadicMatrix power = r;
  // Neumann series: (1+Y)^-1 = sum (-Y)^k, terminates once Y^k = 0 mod p^prec
  for (int k = 1; k <= g.precision; ++k) {
    power = mul(power, y);
    if (power.is_zero()) break;
    if (k % 2 == 1)
      r = sub(r, power);
    else
      r = add(r, power);
  }
  return r;
}

PadicMatrix invert_unit_matrix(const PadicMatrix& a) {
  const u64 mod = a.modulus();
  PadicMatrix w = a;
  PadicMatrix inv = PadicMatrix::identity(a.p, a.size, a.precision);
  for (int col = 0; col < a.size; ++col) {
    int piv = -1;
    for (int r = col; r < a.size; ++r)
      if (w.at(r, col) % a.p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("invert_unit_matrix: not invertible over Z_p");
    for (int j = 0; j < a.size; ++j) {
      std::swap(w.entries[static_cast<std::size_t>(piv) * a.size + j],
                w.entries[static_cast<std::size_t>(col) * a.size + j]);
      std::swap(inv.entries[static_cast<std::size_t>(piv) * a.size + j],
                inv.entries[static_cast<std::size_t>(col) * a.size + j]);
    }
    const u64 pivot_inv = invmod(w.at(col, col), mod);
    for (int j = 0; j < a.size; ++j) {
      w.at(col, j) = mulmod(w.at(col, j), pivot_inv, mod);
      inv.at(col, j) = mulmod(inv.at(col, j), pivot_inv, mod);
    }
    for (int r = 0; r < a.size; ++r) {
      if (r == col) continue;
      const u64 fac = w.at(r, col);
      if (fac == 0) continue;
      for (int j = 0; j < a.size; ++j) {
        w.at(r, j) = (w.at(r, j) + mod - mulmod(fac, w.at(col, j), mod)) % mod;
        inv.at(r, j) = (inv.at(r, j) + mod - mulmod(fac, inv.at(col, j), mod)) % mod;
      }
    }
  }
  return inv;
}

SeriesPlan plan_exp(u64 p, int target) {
  const int v0 = v0_of(p);
  // smooth tail bound n*v0 - (n-1)/(p-1) is increasing; find the first index
  // beyond which every term is certified deeper than target (exact, scaled by p-1)
  const i64 pm1 = static_cast<i64>(p) - 1;
  int t = 1;
  while ((static_cast<i64>(t) + 1) * v0 * pm1 - t < static_cast<i64>(target) * pm1) ++t;
  SeriesPlan plan;
  plan.terms = t;
  const int loss = valp_factorial(static_cast<u64>(t), p);
  plan.working = target + loss;
  plan.certified = target;
  if (plan.working > max_precision(p))
    throw std::domain_error("plan_exp: precision exhausted for this prime");
  return plan;
}

SeriesPlan plan_log(u64 p, int target) {
  const int v0 = v0_of(p);
  auto floor_log_p = [&](int n) {
    int l = 0;
    u64 q = p;
    while (q <= static_cast<u64>(n)) {
      q *= p;
      ++l;
    }
    return l;
  };
  // n*v0 - floor(log_p n) never decreases, so a single scan suffices
  int t = 1;
  while ((t + 1) * v0 - floor_log_p(t + 1) < target) ++t;
  SeriesPlan plan;
  plan.terms = t;
  plan.working = target + floor_log_p(t);
  plan.certified = target;
  if (plan.working > max_precision(p))
    throw std::domain_error("plan_log: precision exhausted for this prime");
  return plan;
}

namespace {

PadicMatrix lift_representative(const PadicMatrix& a, int working) {
  // entries are canonical residues; reinterpreting them at a larger modulus is
  // a representative choice whose ambiguity is charged to `certified`
  PadicMatrix r = a;
  r.precision = working;
  return r;
}

} // namespace

PadicMatrix exp_matrix(const PadicMatrix& x, int target_precision) {
  const int v0 = v0_of(x.p);
  if (x.precision <= v0) throw std::domain_error("exp_matrix: input precision too small");
  if (x.min_valuation() < v0)
    throw std::domain_error("exp_matrix: convergence precondition val >= v0 violated");

  const SeriesPlan plan = plan_exp(x.p, target_precision);
  const int working = plan.working;
  const u64 mod = pow_u64(x.p, working);
  const PadicMatrix xw = lift_representative(x.reduced_to(std::min(x.precision, working)), working);

  const int loss = valp_factorial(static_cast<u64>(plan.terms), x.p);
  PadicMatrix acc = PadicMatrix::identity(x.p, x.size, working - loss);
  PadicMatrix power = PadicMatrix::identity(x.p, x.size, working);
  int fact_val = 0;
  u64 fact_unit = 1;
  for (int n = 1; n <= plan.terms; ++n) {
    power = mul(power, xw);
    const int vn = valp(static_cast<u64>(n), x.p);
    fact_val += vn;
    fact_unit = mulmod(fact_unit, static_cast<u64>(n) / pow_u64(x.p, vn), mod);
    PadicMatrix term = divide_by_p_power(power, fact_val);
    term = scalar_mul(term, invmod(fact_unit % term.modulus(), term.modulus()));
    acc = add(acc, term);
  }
  const int certified = std::min({plan.certified, x.precision, acc.precision});
  return acc.reduced_to(certified);
}

PadicMatrix log_matrix(const PadicMatrix& u, int target_precision) {
  const int v0 = v0_of(u.p);
  if (u.precision <= v0) throw std::domain_error("log_matrix: input precision too small");
  const PadicMatrix y0 = sub_identity(u);
  if (y0.min_valuation() < v0)
    throw std::domain_error("log_matrix: convergence precondition val(u-1) >= v0 violated");

  const SeriesPlan plan = plan_log(u.p, target_precision);
  const int working = plan.working;
  const PadicMatrix y = lift_representative(y0.reduced_to(std::min(u.precision, working)), working);

  const int loss = working - plan.certified;
  PadicMatrix acc = PadicMatrix::zero(u.p, u.size, working - loss);
  PadicMatrix power = PadicMatrix::identity(u.p, u.size, working);
  for (int n = 1; n <= plan.terms; ++n) {
    power = mul(power, y);
    const int vn = valp(static_cast<u64>(n), u.p);
    PadicMatrix term = divide_by_p_power(power, vn);
    term = scalar_mul(term, invmod((static_cast<u64>(n) / pow_u64(u.p, vn)) % term.modulus(),
                                   term.modulus()));
    if (n % 2 == 1)
      acc = add(acc, term);
    else
      acc = sub(acc, term);
  }
  const int certified = std::min({plan.certified, u.precision, acc.precision});
  return acc.reduced_to(certified);
}

bool in_congruence_level(const PadicMatrix& g, const CongruenceLevelSpec& spec) {
  if (g.size != spec.n_size || g.p != spec.p) return false;
  return sub_identity(g).min_valuation() >= spec.level;
}

namespace {

CheckOutcome compare_routes(const PadicMatrix& lhs, const PadicMatrix& rhs,
                            const std::string& fail_note) {
  const PadicMatrix residual = sub(lhs, rhs);
  CheckOutcome out;
  out.certified_precision = residual.precision;
  out.residual_valuation = residual.min_valuation();
  out.holds = residual.is_zero();
  if (!out.holds) out.note = fail_note;
  return out;
}

PadicMatrix conj_by_diag(const PadicMatrix& m, const std::vector<int>& v, bool inverse_first) {
  // a = diag(p^{v_i}); inverse_first computes a^-1 m a, otherwise a m a^-1
  if (static_cast<int>(v.size()) != m.size)
    throw std::invalid_argument("conj_by_diag: exponent count mismatch");
  int max_descent = 0;
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) {
      const int shift = inverse_first ? v[j] - v[i] : v[i] - v[j];
      if (shift < 0) max_descent = std::max(max_descent, -shift);
    }
  if (max_descent >= m.precision)
    throw std::domain_error("conj_by_diag: precision exhausted by denominators");
  PadicMatrix r = PadicMatrix::zero(m.p, m.size, m.precision - max_descent);
  const u64 mod_in = m.modulus();
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) {
      const int shift = inverse_first ? v[j] - v[i] : v[i] - v[j];
      u64 x = m.at(i, j);
      if (shift >= 0) {
        x = mulmod(x, pow_u64(m.p, shift) % mod_in, mod_in);
      } else {
        const u64 pk = pow_u64(m.p, -shift);
        if (x % pk != 0)
          throw std::domain_error("conj_by_diag: entry not divisible by the denominator");
        x /= pk;
      }
      r.at(i, j) = x % r.modulus();
    }
  return r;
}

} // namespace

CheckOutcome conjugation_log_identity(const PadicMatrix& a_unit, const PadicMatrix& u,
                                      int target_precision) {
  const PadicMatrix a_inv = invert_unit_matrix(a_unit);
  const PadicMatrix w = mul(mul(a_inv, u), a_unit);
  const PadicMatrix lhs = log_matrix(w, target_precision);
  const PadicMatrix rhs = mul(mul(a_inv, log_matrix(u, target_precision)), a_unit);
  return compare_routes(lhs, rhs, "log(a^-1 u a) != a^-1 log(u) a");
}

CheckOutcome conjugation_log_identity_diag(const std::vector<int>& diag_exponents,
                                           const PadicMatrix& u, int target_precision) {
  const PadicMatrix w = conj_by_diag(u, diag_exponents, true);
  if (sub_identity(w).min_valuation() < v0_of(u.p)) {
    CheckOutcome out;
    out.holds = false;
    out.certified_precision = w.precision;
    out.residual_valuation = 0;
    out.note = "conjugated input left the log convergence domain";
    return out;
  }
  const PadicMatrix lhs = log_matrix(w, target_precision);
  const PadicMatrix rhs = conj_by_diag(log_matrix(u, target_precision), diag_exponents, true);
  return compare_routes(lhs, rhs, "log(a^-1 u a) != a^-1 log(u) a (diagonal a)");
}

CheckOutcome commutator_power_check(const PadicMatrix& x, const PadicMatrix& y, int level,
                                    int target_precision) {
  CheckOutcome out;
  const u64 p = x.p;
  const int wval = p == 2 ? 2 : 1;  // val_p(wp)
  const u64 wp = wp_of(p);
  if (sub_identity(x).min_valuation() < level || sub_identity(y).min_valuation() < level) {
    out.note = "inputs are not at the requested congruence level";
    return out;
  }
  const PadicMatrix c = mul(mul(invert_principal_unit(x), invert_principal_unit(y)), mul(x, y));
  const PadicMatrix logc = log_matrix(c, target_precision);
  if (logc.min_valuation() < wval + v0_of(p)) {
    out.certified_precision = logc.precision;
    out.residual_valuation = logc.min_valuation();
    out.note = "log([x,y]) not in wp*A0: counterexample candidate, division refused";
    return out;
  }
  const PadicMatrix kappa = exp_matrix(divide_by_p_power(logc, wval), target_precision);
  out = compare_routes(pow_int(kappa, wp), c, "kappa^wp != [x,y]");
  if (out.holds && sub_identity(kappa).min_valuation() < level) {
    out.holds = false;
    out.note = "kappa escaped the congruence subgroup";
  }
  return out;
}

CheckOutcome lower_p_series_forward(const PadicMatrix& g, int level, int target_precision) {
  (void)target_precision;  // exact group arithmetic, no series involved
  CheckOutcome out;
  if (sub_identity(g).min_valuation() < level) {
    out.note = "input not at the requested level";
    return out;
  }
  const PadicMatrix gp = pow_int(g, g.p);
  out.certified_precision = gp.precision;
  out.residual_valuation = sub_identity(gp).min_valuation();
  out.holds = out.residual_valuation >= level + 1;
  if (!out.holds) out.note = "g^p escaped level m+1";
  return out;
}

CheckOutcome lower_p_series_root(const PadicMatrix& h, int level, int target_precision) {
  CheckOutcome out;
  if (sub_identity(h).min_valuation() < level + 1) {
    out.note = "input not at level m+1";
    return out;
  }
  const PadicMatrix logh = log_matrix(h, target_precision);
  const PadicMatrix kappa = exp_matrix(divide_by_p_power(logh, 1), target_precision);
  out = compare_routes(pow_int(kappa, h.p), h, "extracted root fails kappa^p = h");
  if (out.holds && sub_identity(kappa).min_valuation() < level) {
    out.holds = false;
    out.note = "extracted root escaped level m";
  }
  return out;
}

CheckOutcome intersection_uniform_pair(const PadicMatrix& x, const PadicMatrix& y,
                                       const CongruenceLevelSpec& k_spec,
                                       const CongruenceLevelSpec& kprime_spec,
                                       const std::vector<int>& diag_exponents,
                                       int target_precision) {
  CheckOutcome out;
  const u64 p = x.p;
  const int wval = p == 2 ? 2 : 1;
  const u64 wp = wp_of(p);
  auto in_conjugated = [&](const PadicMatrix& g) {
    // g in a^-1 K' a iff a g a^-1 in K'; a failed division already means "no"
    try {
      return sub_identity(conj_by_diag(g, diag_exponents, false)).min_valuation() >=
             kprime_spec.level;
    } catch (const std::domain_error&) {
      return false;
    }
  };
  if (!in_congruence_level(x, k_spec) || !in_congruence_level(y, k_spec) ||
      !in_conjugated(x) || !in_conjugated(y)) {
    out.note = "inputs are not in the intersection";
    return out;
  }
  const PadicMatrix c = mul(mul(invert_principal_unit(x), invert_principal_unit(y)), mul(x, y));
  const PadicMatrix logc = log_matrix(c, target_precision);
  if (logc.min_valuation() < wval + v0_of(p)) {
    out.note = "log([x,y]) not in wp*A0: counterexample candidate, division refused";
    return out;
  }
  const PadicMatrix kappa = exp_matrix(divide_by_p_power(logc, wval), target_precision);
  out = compare_routes(pow_int(kappa, wp), c, "kappa^wp != [x,y] in the intersection");
  if (out.holds && !(sub_identity(kappa).min_valuation() >= k_spec.level && in_conjugated(kappa))) {
    out.holds = false;
    out.note = "kappa escaped a^-1 K' a n K";
  }
  return out;
}

PadicMatrix sample_at_level(std::mt19937_64& eng, u64 p, int size, int level, int precision) {
  if (level >= precision)
    throw std::invalid_argument("sample_at_level: level must be below the working precision");
  PadicMatrix x = PadicMatrix::zero(p, size, precision);
  const u64 pl = pow_u64(p, level);
  const u64 span = pow_u64(p, precision - level);
  for (u64& entry : x.entries) entry = pl * uniform_below(eng, span);
  return add_identity(x);
}

PadicMatrix sample_intersection_element(std::mt19937_64& eng, const CongruenceLevelSpec& k_spec,
                                        const CongruenceLevelSpec& kprime_spec,
                                        const std::vector<int>& diag_exponents, int precision) {
  const u64 p = k_spec.p;
  const int size = k_spec.n_size;
  PadicMatrix x = PadicMatrix::zero(p, size, precision);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      // valuation floor so that both g in K and a g a^-1 in K' hold
      const int floor_ij =
          std::max(k_spec.level, kprime_spec.level + diag_exponents[j] - diag_exponents[i]);
      if (floor_ij >= precision)
        throw std::invalid_argument("sample_intersection_element: floor exceeds precision");
      x.at(i, j) = pow_u64(p, floor_ij) * uniform_below(eng, pow_u64(p, precision - floor_ij));
    }
  return add_identity(x);
}

namespace {

void record(CheckStats& stats, const CheckOutcome& outcome) {
  ++stats.samples;
  if (!outcome.holds) {
    ++stats.failures;
    if (stats.notes.size() < 5) stats.notes.push_back(outcome.note);
  }
  stats.worst_certified = std::min(stats.worst_certified, outcome.certified_precision);
  stats.worst_residual = std::min(stats.worst_residual, outcome.residual_valuation);
}

} // namespace

UniformSuiteReport run_uniform_suite(const UniformCheckConfig& config) {
  const u64 p = config.p;
  if (!detail::is_prime(p)) throw std::invalid_argument("uniform suite: p must be prime");
  if (config.size < 2) throw std::invalid_argument("uniform suite: size must be >= 2");
  const int v0 = v0_of(p);
  const int level = std::max(config.level, v0);
  const int target = config.precision + 2;
  const SeriesPlan pe = plan_exp(p, target);
  const SeriesPlan pl = plan_log(p, target);
  const int working = std::min(max_precision(p), std::max(pe.working, pl.working) + 4);

  UniformSuiteReport report;
  report.config = config;
  report.config.level = level;

  std::vector<int> diag_exps(static_cast<std::size_t>(config.size), 0);
  diag_exps.back() = p == 2 ? 2 : 1;  // a = diag(1,...,1,wp)
  std::vector<int> diag_one(static_cast<std::size_t>(config.size), 0);
  diag_one.back() = 1;

  CheckStats round_trip;
  round_trip.name = "exp_log_round_trip";
  CheckStats conj;
  conj.name = "conjugation_log_identity";
  CheckStats comm;
  comm.name = "commutator_power";
  CheckStats lower;
  lower.name = "lower_p_series";
  CheckStats inter;
  inter.name = "intersection_uniform";

  std::mt19937_64 eng_rt(mix_seed(config.seed, 1, p * 100 + static_cast<u64>(config.size)));
  for (int s = 0; s < config.samples; ++s) {
    const PadicMatrix g = sample_at_level(eng_rt, p, config.size, level, working);
    const PadicMatrix x = sub_identity(g);
    const PadicMatrix u = exp_matrix(x, target);
    CheckOutcome fwd = compare_routes(log_matrix(u, target), x, "log(exp(x)) != x");
    const PadicMatrix back = exp_matrix(log_matrix(g, target), target);
    const CheckOutcome rev = compare_routes(back, g, "exp(log(g)) != g");
    fwd.holds = fwd.holds && rev.holds;
    fwd.certified_precision = std::min(fwd.certified_precision, rev.certified_precision);
    fwd.residual_valuation = std::min(fwd.residual_valuation, rev.residual_valuation);
    if (!rev.holds) fwd.note = rev.note;
    record(round_trip, fwd);
  }

  std::mt19937_64 eng_cj(mix_seed(config.seed, 2, p * 100 + static_cast<u64>(config.size)));
  for (int s = 0; s < config.samples; ++s) {
    const int u_level = std::max(level, v0 + 1);  // stay in the log domain after descent
    const PadicMatrix u = sample_at_level(eng_cj, p, config.size, u_level, working);
    if (s % 2 == 0) {
      record(conj, conjugation_log_identity_diag(diag_one, u, target));
    } else {
      PadicMatrix r = sample_at_level(eng_cj, p, config.size, 1, working);
      record(conj, conjugation_log_identity(r, u, target));
    }
  }

  std::mt19937_64 eng_cm(mix_seed(config.seed, 3, p * 100 + static_cast<u64>(config.size)));
  for (int s = 0; s < config.samples; ++s) {
    const PadicMatrix x = sample_at_level(eng_cm, p, config.size, level, working);
    const PadicMatrix y = sample_at_level(eng_cm, p, config.size, level, working);
    record(comm, commutator_power_check(x, y, level, target));
  }

  std::mt19937_64 eng_lp(mix_seed(config.seed, 4, p * 100 + static_cast<u64>(config.size)));
  for (int s = 0; s < config.samples; ++s) {
    const PadicMatrix g = sample_at_level(eng_lp, p, config.size, level, working);
    CheckOutcome fwd = lower_p_series_forward(g, level, target);
    const PadicMatrix h = sample_at_level(eng_lp, p, config.size, level + 1, working);
    const CheckOutcome root = lower_p_series_root(h, level, target);
    fwd.holds = fwd.holds && root.holds;
    fwd.certified_precision = std::min(fwd.certified_precision, root.certified_precision);
    fwd.residual_valuation = std::min(fwd.residual_valuation, root.residual_valuation);
    if (!root.holds) fwd.note = root.note;
    record(lower, fwd);
  }

  std::mt19937_64 eng_in(mix_seed(config.seed, 5, p * 100 + static_cast<u64>(config.size)));
  const CongruenceLevelSpec kspec{config.size, p, level};
  for (int s = 0; s < config.samples; ++s) {
    const PadicMatrix x = sample_intersection_element(eng_in, kspec, kspec, diag_exps, working);
    const PadicMatrix y = sample_intersection_element(eng_in, kspec, kspec, diag_exps, working);
    record(inter, intersection_uniform_pair(x, y, kspec, kspec, diag_exps, target));
  }

  report.checks = {round_trip, conj, comm, lower, inter};
  report.pass = true;
  for (const CheckStats& stats : report.checks) {
    if (stats.failures > 0) report.pass = false;
    if (stats.worst_certified < config.precision - config.floor_slack) report.pass = false;
  }
  return report;
}

nlohmann::json uniform_report_to_json(const UniformSuiteReport& report) {
  nlohmann::json checks = nlohmann::json::object();
  for (const CheckStats& stats : report.checks) {
    checks[stats.name] = {{"samples", stats.samples},
                          {"failures", stats.failures},
                          {"worst_certified_precision", stats.worst_certified},
                          {"worst_residual_valuation", stats.worst_residual},
                          {"notes", stats.notes}};
  }
  return {{"p", report.config.p},
          {"size", report.config.size},
          {"level", report.config.level},
          {"samples", report.config.samples},
          {"precision", report.config.precision},
          {"seed", report.config.seed},
          {"checks", checks},
          {"pass", report.pass}};
}

} // namespace rind
