#include "rind/rootdata.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rind {

std::string root_key(const Root& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    if (i) os << ',';
    os << r.coeffs[i];
  }
  return os.str();
}

int RootSystem::height(const Root& r) const {
  int h = 0;
  for (int c : r.coeffs) h += c;
  return h;
}

bool RootSystem::is_positive_root(const std::vector<int>& coeffs) const {
  for (const Root& r : positive_roots)
    if (r.coeffs == coeffs) return true;
  return false;
}

Root RootSystem::reduced_neg(std::size_t j) const {
  // reversed positive order, negated: lex ascending on the negative vectors
  const Root& pos = reduced_pos(num_reduced() - 1 - j);
  Root r = pos;
  for (int& c : r.coeffs) c = -c;
  return r;
}

namespace {

// Cartan matrix, entries a[i][j] = <alpha_j, alpha_i^vee>
std::vector<std::vector<int>> cartan_matrix(const std::string& family, int rank) {
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j, int aij, int aji) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  if (family == "A") {
    for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1, -1, -1);
  } else if (family == "B") {
    // last simple root short: <alpha_n, alpha_{n-1}^vee> = -1, <alpha_{n-1}, alpha_n^vee> = -2
    for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1, -1, -1);
    bond(rank - 2, rank - 1, -1, -2);
  } else if (family == "C") {
    // last simple root long: transpose of B
    for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1, -1, -1);
    bond(rank - 2, rank - 1, -2, -1);
  } else if (family == "D") {
    for (int i = 0; i + 3 < rank; ++i) bond(i, i + 1, -1, -1);
    bond(rank - 3, rank - 2, -1, -1);
    bond(rank - 3, rank - 1, -1, -1);
  } else if (family == "G") {
    bond(0, 1, -3, -1);
  }
  return a;
}

// positive roots by the root-string rule: beta + alpha_i is a root iff
// p - <beta, alpha_i^vee> > 0 where p counts how far the string descends
std::vector<Root> closure_positive_roots(const std::vector<std::vector<int>>& cartan) {
  const int rank = static_cast<int>(cartan.size());
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> simple(rank, 0);
    simple[i] = 1;
    found.insert(simple);
    frontier.push_back(simple);
  }
  auto pair_with_coroot = [&](const std::vector<int>& beta, int i) {
    int s = 0;
    for (int j = 0; j < rank; ++j) s += beta[j] * cartan[i][j];
    return s;
  };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < rank; ++i) {
        int p = 0;
        std::vector<int> down = beta;
        for (;;) {
          down[i] -= 1;
          bool nonneg = std::all_of(down.begin(), down.end(), [](int c) { return c >= 0; });
          if (!nonneg || !found.count(down)) break;
          ++p;
        }
        if (p - pair_with_coroot(beta, i) > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (found.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Root> roots;
  for (const auto& c : found) roots.push_back(Root{c, true});
  return roots;  // std::set iteration is already lex ascending
}

} // namespace

RootSystem build_root_system(const std::string& family, int rank) {
  const bool ok = (family == "A" && rank >= 1 && rank <= 8) ||
                  (family == "B" && rank >= 2 && rank <= 8) ||
                  (family == "C" && rank >= 2 && rank <= 8) ||
                  (family == "D" && rank >= 4 && rank <= 8) ||
                  (family == "G" && rank == 2) ||
                  (family == "BC" && rank == 1);
  if (!ok)
    throw std::invalid_argument("unsupported root system: family " + family + " rank " +
                                std::to_string(rank));

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  if (family == "BC") {
    rs.positive_roots = {Root{{1}, true}, Root{{2}, false}};
  } else {
    rs.positive_roots = closure_positive_roots(cartan_matrix(family, rank));
    // mark non-reduced roots; of the listed families only BC_1 has any,
    // the generic check keeps build_root_system honest
    for (Root& r : rs.positive_roots) {
      bool even = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c % 2 == 0; });
      if (even) {
        std::vector<int> half = r.coeffs;
        for (int& c : half) c /= 2;
        bool half_is_root = std::any_of(rs.positive_roots.begin(), rs.positive_roots.end(),
                                        [&](const Root& s) { return s.coeffs == half; });
        if (half_is_root) r.reduced = false;
      }
    }
  }
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    if (rs.positive_roots[i].reduced) rs.reduced_positive.push_back(static_cast<int>(i));
  return rs;
}

int GroupProfile::delta_of(const Root& r) const {
  auto it = delta.find(root_key(r));
  return it == delta.end() ? 1 : it->second;
}

int GroupProfile::root_dim_F(std::size_t reduced_index) const {
  const Root& alpha = root_system.reduced_pos(reduced_index);
  int d = delta_of(alpha);
  std::vector<int> twice = alpha.coeffs;
  for (int& c : twice) c *= 2;
  for (const Root& r : root_system.positive_roots)
    if (r.coeffs == twice) d += delta_of(r);
  return d;
}

void validate_profile(const GroupProfile& profile) {
  if (!detail::is_prime(profile.p))
    throw std::invalid_argument("profile field 'p': " + std::to_string(profile.p) + " is not prime");
  if (profile.e < 1) throw std::invalid_argument("profile field 'e': must be a positive integer");
  if (profile.f < 1) throw std::invalid_argument("profile field 'f': must be a positive integer");
  if (profile.torus_rank < profile.root_system.rank)
    throw std::invalid_argument("profile field 'torus_rank': must be at least the root system rank");
  for (const auto& [key, value] : profile.delta) {
    if (value < 1) throw std::invalid_argument("profile field 'delta': value for key '" + key +
                                               "' must be a positive integer");
    bool known = std::any_of(profile.root_system.positive_roots.begin(),
                             profile.root_system.positive_roots.end(),
                             [&](const Root& r) { return root_key(r) == key; });
    if (!known)
      throw std::invalid_argument("profile field 'delta': key '" + key +
                                  "' does not name a positive root");
  }
}

GroupProfile profile_from_json(const nlohmann::json& j) {
  auto need = [&](const char* field) -> const nlohmann::json& {
    if (!j.contains(field))
      throw std::invalid_argument(std::string("profile field '") + field + "': missing");
    return j.at(field);
  };
  GroupProfile profile;
  const auto& fam = need("family");
  if (!fam.is_string()) throw std::invalid_argument("profile field 'family': must be a string");
  const auto& rank = need("rank");
  if (!rank.is_number_integer())
    throw std::invalid_argument("profile field 'rank': must be an integer");
  profile.root_system = build_root_system(fam.get<std::string>(), rank.get<int>());

  auto get_int = [&](const char* field) {
    const auto& v = need(field);
    if (!v.is_number_integer())
      throw std::invalid_argument(std::string("profile field '") + field + "': must be an integer");
    return v.get<i64>();
  };
  const i64 p = get_int("p");
  if (p < 2) throw std::invalid_argument("profile field 'p': must be a prime");
  profile.p = static_cast<u64>(p);
  profile.e = static_cast<int>(get_int("e"));
  profile.f = static_cast<int>(get_int("f"));
  profile.torus_rank = static_cast<int>(get_int("torus_rank"));
  if (j.contains("delta")) {
    const auto& d = j.at("delta");
    if (!d.is_object()) throw std::invalid_argument("profile field 'delta': must be an object");
    for (const auto& [key, value] : d.items()) {
      if (!value.is_number_integer())
        throw std::invalid_argument("profile field 'delta': value for key '" + key +
                                    "' must be an integer");
      profile.delta[key] = value.get<int>();
    }
  }
  validate_profile(profile);
  return profile;
}

nlohmann::json profile_to_json(const GroupProfile& profile) {
  nlohmann::json d = nlohmann::json::object();
  for (const auto& [key, value] : profile.delta) d[key] = value;
  return {{"family", profile.root_system.family},
          {"rank", profile.root_system.rank},
          {"p", profile.p},
          {"e", profile.e},
          {"f", profile.f},
          {"delta", d},
          {"torus_rank", profile.torus_rank}};
}

int pairing(const Cocharacter& mu, const Root& alpha) {
  // fundamental coweights are dual to simple roots; central coordinates pair to zero
  int s = 0;
  const std::size_t n = alpha.coeffs.size();
  if (mu.coords.size() < n) throw std::invalid_argument("pairing: cocharacter too short");
  for (std::size_t i = 0; i < n; ++i) s += mu.coords[i] * alpha.coeffs[i];
  return s;
}

bool is_dominant(const GroupProfile& profile, const Cocharacter& mu) {
  for (const Root& alpha : profile.root_system.positive_roots)
    if (pairing(mu, alpha) < 0) return false;
  return true;
}

int i0(const GroupProfile& profile) {
  int s = 0;
  for (std::size_t j = 0; j < profile.root_system.num_reduced(); ++j)
    s += profile.root_dim_Qp(j);
  return s;
}

int top_dimension(const GroupProfile& profile) {
  return 2 * i0(profile) + profile.center_dim_Qp();
}

Cocharacter find_deep_dominant(const GroupProfile& profile, int threshold) {
  if (threshold < 0) throw std::invalid_argument("find_deep_dominant: threshold must be >= 0");
  const RootSystem& rs = profile.root_system;
  int scale = 0;
  for (const Root& alpha : rs.positive_roots) {
    const int h = rs.height(alpha);  // pairing of the coweight sum with alpha
    scale = std::max(scale, (threshold + h - 1) / h);
  }
  Cocharacter mu;
  mu.coords.assign(static_cast<std::size_t>(profile.torus_rank), 0);
  for (int i = 0; i < rs.rank; ++i) mu.coords[i] = scale;
  return mu;
}

std::vector<Cocharacter> enumerate_dominant(const GroupProfile& profile, int box_bound) {
  if (box_bound < 0) throw std::invalid_argument("enumerate_dominant: box_bound must be >= 0");
  const std::size_t n = static_cast<std::size_t>(profile.torus_rank);
  std::vector<Cocharacter> out;
  Cocharacter mu;
  mu.coords.assign(n, 0);
  for (;;) {
    if (is_dominant(profile, mu)) out.push_back(mu);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (mu.coords[i] < box_bound) {
        mu.coords[i] += 1;
        break;
      }
      mu.coords[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;  // rank-zero torus: only the empty cocharacter
  }
}

} // namespace rind
