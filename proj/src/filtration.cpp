#include "rind/filtration.hpp"

#include <algorithm>
#include <stdexcept>

namespace rind {

bool profiles_match(const GroupProfile& a, const GroupProfile& b) {
  return a.root_system.family == b.root_system.family &&
         a.root_system.rank == b.root_system.rank && a.p == b.p && a.e == b.e && a.f == b.f &&
         a.delta == b.delta && a.torus_rank == b.torus_rank;
}

bool admissible_level(const GroupProfile& profile, int m) {
  if (m < 1 || m % profile.e != 0) return false;
  if (profile.p == 2 && m <= profile.e) return false;
  return true;
}

FiltrationShape congruence_shape(const GroupProfile& profile, int m) {
  if (m < 1) throw std::invalid_argument("congruence_shape: level must be >= 1");
  FiltrationShape s;
  s.profile = &profile;
  s.neg_levels.assign(profile.root_system.num_reduced(), m);
  s.center_level = m;
  s.pos_levels.assign(profile.root_system.num_reduced(), m);
  s.uniform_certified = admissible_level(profile, m);
  return s;
}

FiltrationShape conjugate(const FiltrationShape& shape, const Cocharacter& z) {
  const RootSystem& rs = shape.profile->root_system;
  FiltrationShape s = shape;
  for (std::size_t j = 0; j < rs.num_reduced(); ++j) {
    s.neg_levels[j] += pairing(z, rs.reduced_neg(j));
    s.pos_levels[j] += pairing(z, rs.reduced_pos(j));
  }
  return s;
}

FiltrationShape intersect(const FiltrationShape& a, const FiltrationShape& b) {
  if (!profiles_match(*a.profile, *b.profile))
    throw std::invalid_argument("intersect: profile mismatch");
  FiltrationShape s = a;
  for (std::size_t j = 0; j < s.neg_levels.size(); ++j)
    s.neg_levels[j] = std::max(a.neg_levels[j], b.neg_levels[j]);
  s.center_level = std::max(a.center_level, b.center_level);
  for (std::size_t j = 0; j < s.pos_levels.size(); ++j)
    s.pos_levels[j] = std::max(a.pos_levels[j], b.pos_levels[j]);
  s.uniform_certified = a.uniform_certified && b.uniform_certified;
  return s;
}

FiltrationShape p_power(const FiltrationShape& shape) {
  if (!shape.uniform_certified)
    throw std::domain_error("p_power: shape is not certified uniform");
  const int e = shape.profile->e;
  FiltrationShape s = shape;
  for (int& l : s.neg_levels) l += e;
  s.center_level += e;
  for (int& l : s.pos_levels) l += e;
  return s;
}

FrattiniDims frattini_dims(const FiltrationShape& shape) {
  if (!shape.uniform_certified)
    throw std::domain_error("frattini_dims: shape is not certified uniform");
  return profile_frattini_dims(*shape.profile);
}

FrattiniDims profile_frattini_dims(const GroupProfile& pr) {
  const std::size_t n = pr.root_system.num_reduced();
  FrattiniDims d;
  d.neg.resize(n);
  d.pos.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    // the negative enumeration reverses the positive one; dimensions follow the root
    d.neg[j] = pr.root_dim_Qp(n - 1 - j);
    d.pos[j] = pr.root_dim_Qp(j);
  }
  d.center = pr.center_dim_Qp();
  return d;
}

nlohmann::json shape_to_json(const FiltrationShape& shape) {
  nlohmann::json arr = nlohmann::json::array();
  for (int l : shape.neg_levels) arr.push_back(l);
  arr.push_back(shape.center_level);
  for (int l : shape.pos_levels) arr.push_back(l);
  return arr;
}

} // namespace rind
