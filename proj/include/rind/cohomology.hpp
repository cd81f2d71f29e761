#ifndef RIND_COHOMOLOGY_HPP
#define RIND_COHOMOLOGY_HPP

#include <functional>
#include <vector>

#include "json.hpp"
#include "rind/filtration.hpp"

namespace rind {

// One tensor-of-exterior-powers summand: wedge degree per negative root factor,
// center degree b, wedge degree per positive root factor.
struct Block {
  std::vector<int> a;  // Phi_red^- enumeration
  int b = 0;
  std::vector<int> c;  // Phi_red^+ enumeration

  int degree() const {
    int d = b;
    for (int x : a) d += x;
    for (int x : c) d += x;
    return d;
  }
  bool operator==(const Block&) const = default;
};

Block zero_block(const GroupProfile& profile);
nlohmann::json block_to_json(const GroupProfile& profile, const Block& blk);

// multiplicity of the block inside H^degree: product of per-factor binomials
u64 block_weight(const FrattiniDims& dims, const Block& blk);

struct GradedDims {
  std::vector<u64> dims;  // indexed by degree 0..d

  int top() const { return static_cast<int>(dims.size()) - 1; }
  u64 total() const {
    u64 t = 0;
    for (u64 v : dims) t += v;
    return t;
  }
  bool operator==(const GradedDims&) const = default;
};

// coefficients of prod over factors of (1+x)^dim; requires a certified shape
GradedDims cohomology_dims(const FiltrationShape& shape);

// rank of the a-th exterior power of a rank-r map
u64 exterior_power_rank(int r, int a);

// visits every block of the given degree exactly once; throws if i is out of
// [0, top_dimension]
void visit_blocks_of_degree(const GroupProfile& profile, int i,
                            const std::function<void(const Block&)>& visit);

std::vector<Block> blocks_of_degree(const GroupProfile& profile, int i);

} // namespace rind

#endif
