#pragma once

#include <utility>
#include <vector>

#include "bcom/caps.hpp"
#include "bcom/group.hpp"

namespace bcom {

// A collection of abelian subgroups closed under conjugation and pairwise
// intersection, with the inclusion order and its conjugacy classes.
// Subgroups are sorted by (order, lexicographic member list), so conjugacy
// class representatives (minimal index in class) have lexicographically
// minimal member lists.
struct AbelianPoset {
  const FiniteGroup* parent = nullptr;
  std::vector<Subgroup> groups;
  std::vector<std::vector<char>> leq;  // leq[i][j] : groups[i] subset of groups[j]
  std::vector<int> class_of;           // group index -> conjugacy class id
  std::vector<int> class_reps;         // class id -> group index
  bool require_center = false;

  int size() const { return static_cast<int>(groups.size()); }
  std::vector<std::pair<int, int>> leq_pairs() const;  // including reflexive
  // exhaustive closure checks; throws ValidationError on violation
  void check_closure() const;
};

// Enumerates all abelian subgroups of G (optionally only those containing the
// center), by closing cyclic subgroups under one-element centralizer
// extensions. Complete for abelian subgroups of every rank.
AbelianPoset abelian_subgroup_poset(const FiniteGroup& G, bool require_center,
                                    const Caps& caps = {});

// Builds an AbelianPoset from an explicit list of member vectors (validated:
// abelian subgroups, closure under conjugation and intersection).
AbelianPoset poset_from_subgroups(const FiniteGroup& G,
                                  std::vector<std::vector<Elt>> member_lists);

}  // namespace bcom
