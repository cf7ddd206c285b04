#pragma once

#include <vector>

#include "bcom/caps.hpp"
#include "bcom/group.hpp"
#include "bcom/simplicial.hpp"
#include "bcom/tau.hpp"

namespace bcom {

// Exhaustive, duplicate-free, lexicographically ordered enumeration of the
// degree-n tuple space of tau over G, restricted to a universe (a subgroup's
// member set; empty = all of G). For Z and ZMod the tuples are pairwise
// commuting; enumeration extends a partial tuple inside the centralizer of
// its entries. Guarded by caps.max_tuple_estimate.
std::vector<std::vector<Elt>> hom_set(const FiniteGroup& G, TauSpec tau, int n,
                                      const std::vector<Elt>& universe = {},
                                      const Caps& caps = {});

// Face d_i of a length-n tuple, 0 <= i <= n: d_0 drops the first entry,
// d_n the last, and d_i multiplies the adjacent entries i, i+1.
std::vector<Elt> tuple_face(const FiniteGroup& G, int i,
                            const std::vector<Elt>& t);
// Degeneracy s_j inserts the identity at slot j, 0 <= j <= n.
std::vector<Elt> tuple_degeneracy(const FiniteGroup& G, int j,
                                  const std::vector<Elt>& t);

// The simplicial set of tau-tuples in G, populated through degree D+1
// (homology through degree D needs the boundary from degree D+1). Simplex
// keys are the tuples themselves; degree 0 is a single point.
SSetPtr build_bcom(const FiniteGroup& G, TauSpec tau, int D,
                   const Caps& caps = {});
// Same with entries restricted to a subgroup's members (keys stay ambient
// element indices, so inclusion-induced maps are index lookups).
SSetPtr build_bcom_in(const FiniteGroup& G, const std::vector<Elt>& universe,
                      TauSpec tau, int D, const Caps& caps = {});

// Levelwise injection induced by a surjection of the indexing cosimplicial
// groups: legal pairs are zmod:m -> zmod:m' (m | m'), zmod -> z, z -> free,
// and identities; zadic resolves to zmod first. Throws for other pairs.
SimplicialMap inclusion_map(const FiniteGroup& G, TauSpec from, TauSpec to,
                            int D, const Caps& caps = {});

// B(Z/ell^k, G) with k = exponent_valuation(G, ell); the tower of such
// spaces is stationary from k on. Records k in meta["adic_k"].
SSetPtr stabilized_adic(const FiniteGroup& G, int ell, int D,
                        const Caps& caps = {});

}  // namespace bcom
