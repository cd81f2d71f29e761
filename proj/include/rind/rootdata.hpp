#ifndef RIND_ROOTDATA_HPP
#define RIND_ROOTDATA_HPP

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "rind/numutil.hpp"

namespace rind {

// A root as an integer coefficient vector over the simple roots.
struct Root {
  std::vector<int> coeffs;
  bool reduced = true;

  bool operator==(const Root&) const = default;
};

std::string root_key(const Root& r);  // "c1,c2,..." used for delta maps and JSON

// Positive roots enumerated from the Cartan matrix by root-string closure.
// positive_roots is sorted lex ascending on coefficient vectors.
// reduced_positive holds indices of the reduced ones, same order.
// The negative reduced enumeration used everywhere (witness fill, shape
// serialization) is lex ascending on the negated vectors, which is exactly
// the reversed positive order.
struct RootSystem {
  std::string family;
  int rank = 0;
  std::vector<Root> positive_roots;
  std::vector<int> reduced_positive;

  int height(const Root& r) const;
  bool is_positive_root(const std::vector<int>& coeffs) const;
  std::size_t num_reduced() const { return reduced_positive.size(); }
  const Root& reduced_pos(std::size_t j) const { return positive_roots[reduced_positive[j]]; }
  // j-th negative reduced root in the fixed enumeration
  Root reduced_neg(std::size_t j) const;
};

// Supported: A (rank 1..8), B/C (2..8), D (4..8), G (2), BC (1).
RootSystem build_root_system(const std::string& family, int rank);

struct GroupProfile {
  RootSystem root_system;
  u64 p = 3;
  int e = 1;
  int f = 1;
  std::map<std::string, int> delta;  // keyed by root_key; absent means 1
  int torus_rank = 1;

  int delta_of(const Root& r) const;
  // delta_alpha + delta_{2 alpha}, the F-dimension of the reduced root factor
  int root_dim_F(std::size_t reduced_index) const;
  int root_dim_Qp(std::size_t reduced_index) const { return root_dim_F(reduced_index) * e * f; }
  int center_dim_Qp() const { return torus_rank * e * f; }
  int v0() const { return p == 2 ? 2 : 1; }      // exp/log convergence floor
  u64 wp() const { return p == 2 ? 4 : p; }      // the power in the powerful condition
};

// throws std::invalid_argument naming the offending field
void validate_profile(const GroupProfile& profile);

GroupProfile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const GroupProfile& profile);

// Coordinates: rank entries in the fundamental-coweight basis, then
// torus_rank - rank central entries (pair to zero with every root).
struct Cocharacter {
  std::vector<int> coords;

  bool operator==(const Cocharacter&) const = default;
};

int pairing(const Cocharacter& mu, const Root& alpha);
bool is_dominant(const GroupProfile& profile, const Cocharacter& mu);

int i0(const GroupProfile& profile);
int top_dimension(const GroupProfile& profile);

// minimal multiple of the sum of fundamental coweights with all positive
// pairings >= threshold; central coordinates zero
Cocharacter find_deep_dominant(const GroupProfile& profile, int threshold);

// all dominant cocharacters with every coordinate in [0, box_bound]
std::vector<Cocharacter> enumerate_dominant(const GroupProfile& profile, int box_bound);

} // namespace rind

#endif
