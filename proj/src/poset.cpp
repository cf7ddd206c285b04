#include "bcom/poset.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "bcom/util.hpp"

namespace bcom {

namespace {

std::vector<Elt> intersect_sorted(const std::vector<Elt>& a,
                                  const std::vector<Elt>& b) {
  std::vector<Elt> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool subset_sorted(const std::vector<Elt>& a, const std::vector<Elt>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct MemberSetIndex {
  std::unordered_map<std::vector<int32_t>, int, VecHash> map;
  int find(const std::vector<Elt>& m) const {
    auto it = map.find(m);
    return it == map.end() ? -1 : it->second;
  }
};

AbelianPoset finalize(const FiniteGroup& G, std::vector<std::vector<Elt>> sets,
                      bool require_center) {
  std::sort(sets.begin(), sets.end(),
            [](const std::vector<Elt>& a, const std::vector<Elt>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  AbelianPoset P;
  P.parent = &G;
  P.require_center = require_center;
  MemberSetIndex index;
  for (size_t i = 0; i < sets.size(); ++i)
    index.map[sets[i]] = static_cast<int>(i);
  for (auto& m : sets) P.groups.push_back(Subgroup{&G, m});

  const int N = P.size();
  P.leq.assign(N, std::vector<char>(N, 0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      P.leq[i][j] =
          subset_sorted(P.groups[i].members, P.groups[j].members) ? 1 : 0;

  P.class_of.assign(N, -1);
  for (int i = 0; i < N; ++i) {
    if (P.class_of[i] >= 0) continue;
    const int cid = static_cast<int>(P.class_reps.size());
    P.class_reps.push_back(i);
    for (Elt g = 0; g < G.order(); ++g) {
      int j = index.find(conjugate_members(G, g, P.groups[i].members));
      if (j < 0)
        throw ValidationError("collection is not closed under conjugation");
      if (P.class_of[j] < 0) P.class_of[j] = cid;
    }
  }
  return P;
}

}  // namespace

std::vector<std::pair<int, int>> AbelianPoset::leq_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (leq[i][j]) out.emplace_back(i, j);
  return out;
}

void AbelianPoset::check_closure() const {
  MemberSetIndex index;
  for (int i = 0; i < size(); ++i) index.map[groups[i].members] = i;
  for (int i = 0; i < size(); ++i) {
    if (!groups[i].is_abelian())
      throw ValidationError("poset member " + std::to_string(i) +
                            " is not abelian");
    if (!is_subgroup(*parent, groups[i].members))
      throw ValidationError("poset member " + std::to_string(i) +
                            " is not a subgroup");
  }
  for (int i = 0; i < size(); ++i)
    for (int j = i; j < size(); ++j)
      if (index.find(intersect_sorted(groups[i].members, groups[j].members)) < 0)
        throw ValidationError("poset not closed under intersection at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
  for (int i = 0; i < size(); ++i)
    for (Elt g = 0; g < parent->order(); ++g)
      if (index.find(conjugate_members(*parent, g, groups[i].members)) < 0)
        throw ValidationError("poset not closed under conjugation at " +
                              std::to_string(i));
  // leq must match inclusion, and be a partial order
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      bool inc = subset_sorted(groups[i].members, groups[j].members);
      if (static_cast<bool>(leq[i][j]) != inc)
        throw ValidationError("leq inconsistent with inclusion");
      if (i != j && leq[i][j] && leq[j][i])
        throw ValidationError("leq is not antisymmetric");
    }
}

AbelianPoset abelian_subgroup_poset(const FiniteGroup& G, bool require_center,
                                    const Caps& caps) {
  caps.validate();
  if (G.order() > caps.max_group_order)
    throw ResourceLimitError(
        "subgroup enumeration restricted to groups of order <= " +
        std::to_string(caps.max_group_order));

  std::unordered_set<std::vector<int32_t>, VecHash> seen;
  std::vector<std::vector<Elt>> pool;
  auto add = [&](std::vector<Elt> m) {
    if (seen.insert(m).second) {
      pool.push_back(std::move(m));
      if (static_cast<long long>(pool.size()) > caps.max_subgroups)
        throw ResourceLimitError("abelian subgroup count exceeds cap");
      return true;
    }
    return false;
  };

  add({0});
  for (Elt g = 1; g < G.order(); ++g)
    add(subgroup_generated(G, {g}).members);

  // close under adjoining a centralizing element; reaches every abelian
  // subgroup since any generating set can be added one element at a time
  for (size_t i = 0; i < pool.size(); ++i) {
    const std::vector<Elt> current = pool[i];
    Subgroup A{&G, current};
    Subgroup C = centralizer(G, current);
    for (Elt g : C.members) {
      if (A.contains(g)) continue;
      std::vector<Elt> gens = current;
      gens.push_back(g);
      Subgroup B = subgroup_generated(G, gens);
      if (B.is_abelian()) add(B.members);
    }
  }

  std::vector<std::vector<Elt>> sets;
  if (require_center) {
    const Subgroup Z = center(G);
    for (auto& m : pool)
      if (subset_sorted(Z.members, m)) sets.push_back(m);
  } else {
    sets = pool;
  }

  AbelianPoset P = finalize(G, std::move(sets), require_center);
  P.check_closure();
  progress("abelian subgroup poset of " + G.name() + ": " +
           std::to_string(P.size()) + " subgroups, " +
           std::to_string(P.class_reps.size()) + " classes");
  return P;
}

AbelianPoset poset_from_subgroups(const FiniteGroup& G,
                                  std::vector<std::vector<Elt>> member_lists) {
  AbelianPoset P = finalize(G, std::move(member_lists), false);
  P.check_closure();
  return P;
}

}  // namespace bcom
