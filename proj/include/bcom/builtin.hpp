#pragma once

#include <string>

#include "bcom/group.hpp"

namespace bcom {

// Builds a group from a spec string. Atoms:
//   C<m>            cyclic of order m
//   V4              Klein four group (= C2xC2)
//   S<n>, A<n>      symmetric / alternating, n <= 5
//   D<n>            dihedral of order 2n (symmetries of the n-gon), n >= 3
//   Q8              quaternion group
//   GL2:<q>, SL2:<q> matrix groups over F_q, q a prime power <= 5
// Products are written with 'x', e.g. "C2xC2xC2". Case-insensitive.
// Element orderings are canonical with the identity at index 0 and are
// documented per family next to each builder.
FiniteGroup builtin_group(const std::string& spec);

FiniteGroup cyclic_group(int m);
FiniteGroup klein_four();
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
FiniteGroup dihedral_group(int n);   // order 2n
FiniteGroup quaternion_group();
FiniteGroup gl2(int q);
FiniteGroup sl2(int q);
FiniteGroup product_group(const FiniteGroup& A, const FiniteGroup& B);

// Index set of the diagonal subgroup of GL2(q)/SL2(q) as built above.
std::vector<Elt> diagonal_torus_members(const FiniteGroup& G, int q);

// All automorphisms of G, each as a permutation of element indices.
// Backtracking search; guarded to small groups.
std::vector<std::vector<Elt>> automorphism_group(const FiniteGroup& G,
                                                 int max_order = 64);

}  // namespace bcom
