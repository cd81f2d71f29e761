#include "rind/cohomology.hpp"

#include <stdexcept>

namespace rind {

Block zero_block(const GroupProfile& profile) {
  Block blk;
  blk.a.assign(profile.root_system.num_reduced(), 0);
  blk.c.assign(profile.root_system.num_reduced(), 0);
  return blk;
}

nlohmann::json block_to_json(const GroupProfile& profile, const Block& blk) {
  const RootSystem& rs = profile.root_system;
  nlohmann::json a = nlohmann::json::object();
  nlohmann::json c = nlohmann::json::object();
  for (std::size_t j = 0; j < rs.num_reduced(); ++j) {
    if (blk.a[j] != 0) a[root_key(rs.reduced_neg(j))] = blk.a[j];
    if (blk.c[j] != 0) c[root_key(rs.reduced_pos(j))] = blk.c[j];
  }
  return {{"a", a}, {"b", blk.b}, {"c", c}};
}

u64 block_weight(const FrattiniDims& dims, const Block& blk) {
  u64 w = 1;
  for (std::size_t j = 0; j < dims.neg.size(); ++j) w *= binomial(dims.neg[j], blk.a[j]);
  w *= binomial(dims.center, blk.b);
  for (std::size_t j = 0; j < dims.pos.size(); ++j) w *= binomial(dims.pos[j], blk.c[j]);
  return w;
}

GradedDims cohomology_dims(const FiltrationShape& shape) {
  const FrattiniDims fd = frattini_dims(shape);  // throws on uncertified shapes
  GradedDims out;
  out.dims = {1};
  for (int dim : fd.flat()) {
    // multiply by (1+x)^dim one binomial row at a time
    std::vector<u64> next(out.dims.size() + static_cast<std::size_t>(dim), 0);
    for (std::size_t i = 0; i < out.dims.size(); ++i)
      for (int k = 0; k <= dim; ++k) next[i + static_cast<std::size_t>(k)] +=
          out.dims[i] * binomial(dim, k);
    out.dims = std::move(next);
  }
  return out;
}

u64 exterior_power_rank(int r, int a) {
  if (r < 0 || a < 0) throw std::invalid_argument("exterior_power_rank: negative argument");
  return binomial(r, a);
}

namespace {

void visit_rec(const std::vector<int>& caps, std::size_t idx, int remaining,
               std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& emit) {
  if (idx == caps.size()) {
    if (remaining == 0) emit(cur);
    return;
  }
  // capacity pruning keeps the walk linear in the number of emitted blocks
  int tail_cap = 0;
  for (std::size_t j = idx; j < caps.size(); ++j) tail_cap += caps[j];
  if (remaining > tail_cap) return;
  const int hi = std::min(caps[idx], remaining);
  for (int v = 0; v <= hi; ++v) {
    cur[idx] = v;
    visit_rec(caps, idx + 1, remaining - v, cur, emit);
  }
  cur[idx] = 0;
}

} // namespace

void visit_blocks_of_degree(const GroupProfile& profile, int i,
                            const std::function<void(const Block&)>& visit) {
  const int d = top_dimension(profile);
  if (i < 0 || i > d)
    throw std::invalid_argument("blocks_of_degree: degree " + std::to_string(i) +
                                " out of range [0, " + std::to_string(d) + "]");
  const FrattiniDims fd = profile_frattini_dims(profile);
  const std::vector<int> caps = fd.flat();
  const std::size_t n = fd.neg.size();
  std::vector<int> cur(caps.size(), 0);
  visit_rec(caps, 0, i, cur, [&](const std::vector<int>& tuple) {
    Block blk;
    blk.a.assign(tuple.begin(), tuple.begin() + n);
    blk.b = tuple[n];
    blk.c.assign(tuple.begin() + n + 1, tuple.end());
    visit(blk);
  });
}

std::vector<Block> blocks_of_degree(const GroupProfile& profile, int i) {
  std::vector<Block> out;
  visit_blocks_of_degree(profile, i, [&](const Block& blk) { out.push_back(blk); });
  return out;
}

} // namespace rind
