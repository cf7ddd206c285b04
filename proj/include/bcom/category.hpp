#pragma once

#include <utility>
#include <vector>

#include "bcom/group.hpp"

namespace bcom {

// A finite category: objects 0..n_obj-1, arrows with source/target, identity
// arrow per object and a composition table. comp(g, f) is "first f, then g".
struct FiniteCategory {
  int n_obj = 0;
  std::vector<int> arrow_src, arrow_tgt;
  std::vector<int> identity_arrow;          // per object
  std::vector<std::vector<int32_t>> comp;   // comp[g][f], -1 if not composable

  int n_arrows() const { return static_cast<int>(arrow_src.size()); }
  int32_t compose(int g, int f) const { return comp[g][f]; }
  bool is_identity(int f) const {
    return identity_arrow[arrow_src[f]] == f;
  }

  // associativity, unit laws, source/target bookkeeping; exhaustive
  void validate() const;
  // at most one arrow per ordered object pair and no two-cycles
  bool is_poset() const;
  // unique arrow src -> tgt in a poset category, -1 if none
  int arrow_between(int src, int tgt) const;

  // Builds the poset category: arrows are the reflexive-transitive closure of
  // the given relation pairs. Throws if the closure is not antisymmetric.
  static FiniteCategory from_poset(int n_obj,
                                   const std::vector<std::pair<int, int>>& rel);
  // One object, arrows = group elements, composition in diagram order
  // (so the nerve agrees with the tuple convention of the bar construction).
  static FiniteCategory delooping(const FiniteGroup& G);
};

}  // namespace bcom
