#ifndef RIND_FILTRATION_HPP
#define RIND_FILTRATION_HPP

#include <vector>

#include "json.hpp"
#include "rind/rootdata.hpp"

namespace rind {

// Integer level per Iwahori factor. The constant shape at level m stands for
// K_m; intersect(constant-m, conjugate(constant-n, z)) stands for K_m n zK_nz^-1.
//
// uniform_certified records *why* the shape is known uniform: congruence shapes
// certify by the literal level test (m in e*N, m > e when p = 2); conjugation
// and intersection preserve the certificate even when root levels leave e*N,
// which is the intersection-uniformity lemma, not a level condition.
struct FiltrationShape {
  const GroupProfile* profile = nullptr;
  std::vector<int> neg_levels;   // indexed by the fixed Phi_red^- enumeration
  int center_level = 0;
  std::vector<int> pos_levels;   // Phi_red^+ lex ascending
  bool uniform_certified = false;

  bool same_levels(const FiltrationShape& other) const {
    return neg_levels == other.neg_levels && center_level == other.center_level &&
           pos_levels == other.pos_levels;
  }
};

bool profiles_match(const GroupProfile& a, const GroupProfile& b);

// the literal admissibility test: m in e*N, m >= 1, and m > e if p = 2
bool admissible_level(const GroupProfile& profile, int m);

// every factor at level m; certified uniform iff admissible_level(m)
FiltrationShape congruence_shape(const GroupProfile& profile, int m);

// root level r -> r + <mu, alpha>, center unchanged
FiltrationShape conjugate(const FiltrationShape& shape, const Cocharacter& z);

// pointwise max; throws on profile mismatch
FiltrationShape intersect(const FiltrationShape& a, const FiltrationShape& b);

// every level + e; requires a certified-uniform shape
FiltrationShape p_power(const FiltrationShape& shape);

struct FrattiniDims {
  std::vector<int> neg;
  int center = 0;
  std::vector<int> pos;

  int total() const {
    int t = center;
    for (int d : neg) t += d;
    for (int d : pos) t += d;
    return t;
  }
  // flat factor list in serialization order: neg..., center, pos...
  std::vector<int> flat() const {
    std::vector<int> v = neg;
    v.push_back(center);
    v.insert(v.end(), pos.begin(), pos.end());
    return v;
  }
};

// per-factor dual Frattini quotient dimensions; level-independent
FrattiniDims frattini_dims(const FiltrationShape& shape);

// the same dimension data straight from the profile, for callers that have no
// shape in hand (the dimensions never depended on one)
FrattiniDims profile_frattini_dims(const GroupProfile& profile);

// flat level array: neg..., center, pos...
nlohmann::json shape_to_json(const FiltrationShape& shape);

} // namespace rind

#endif
