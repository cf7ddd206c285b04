#pragma once

#include <cstdint>

namespace bcom {

// Resource guards for the enumeration-heavy paths. All limits are checked
// before the corresponding work is started where an upper bound is cheap to
// estimate, and during accumulation otherwise.
struct Caps {
  // Full subgroup enumeration is restricted to groups of at most this order.
  int max_group_order = 400;
  // Bound on the number of subgroups an abelian-subgroup poset may contain.
  long long max_subgroups = 50000;
  // hom_set guard: |universe| * |candidates|^(n-1) must stay below this.
  long long max_tuple_estimate = 50'000'000;
  // Per-degree bound on the number of simplices of any built simplicial set.
  long long max_simplices = 5'000'000;
  // Dense elimination is used up to this many columns, sparse beyond.
  int dense_column_limit = 20000;

  void validate() const;
};

}  // namespace bcom
