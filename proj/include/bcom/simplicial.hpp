#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "bcom/caps.hpp"
#include "bcom/category.hpp"
#include "bcom/util.hpp"

namespace bcom {

// Canonical value of a simplex: an int vector whose meaning depends on the
// construction (tuple of group elements, arrow string, orbit representative,
// chain + payload, ...). Keys are unique within each degree.
using SimplexKey = std::vector<int32_t>;

// A truncated, levelwise-finite simplicial set with tabulated face and
// degeneracy maps. Degrees 0..top_degree carry simplices; faces exist for
// degrees >= 1, degeneracies target every degree <= top_degree. Immutable
// after construction.
class SimplicialSet {
 public:
  int top_degree() const { return top_; }
  int dim(int k) const { return static_cast<int>(keys_[k].size()); }
  int32_t face(int k, int i, int32_t s) const { return face_[k][i][s]; }
  int32_t degeneracy(int k, int j, int32_t s) const { return degen_[k][j][s]; }
  bool is_degenerate(int k, int32_t s) const { return degenerate_[k][s]; }
  const SimplexKey& key(int k, int32_t s) const { return keys_[k][s]; }
  int32_t index_of(int k, const SimplexKey& key) const;

  int nondegenerate_count(int k) const {
    return static_cast<int>(nondeg_[k].size());
  }
  const std::vector<int32_t>& nondegenerate(int k) const { return nondeg_[k]; }

  // exhaustive simplicial identity check on all stored simplices
  void check_identities() const;

  std::map<std::string, long long> meta;

  class Builder;

 private:
  SimplicialSet() = default;
  int top_ = 0;
  std::vector<std::vector<SimplexKey>> keys_;                   // [k][s]
  std::vector<std::unordered_map<SimplexKey, int32_t, VecHash>> index_;
  std::vector<std::vector<std::vector<int32_t>>> face_;    // [k][i][s], k>=1
  std::vector<std::vector<std::vector<int32_t>>> degen_;   // [k][j][s], k<top
  std::vector<std::vector<char>> degenerate_;
  std::vector<std::vector<int32_t>> nondeg_;
  void compute_degeneracy_flags();
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

// Two-phase construction: intern all simplices per degree, then resolve
// faces/degeneracies through key-level callbacks.
class SimplicialSet::Builder {
 public:
  explicit Builder(int top_degree, const Caps& caps = {});
  int32_t add(int k, SimplexKey key);  // interns; returns index
  int dim(int k) const;
  using KeyFn = std::function<SimplexKey(int k, int i, const SimplexKey&)>;
  // face_fn(k, i, key) for 1 <= k <= top, 0 <= i <= k;
  // degen_fn(k, j, key) for 0 <= k < top, 0 <= j <= k.
  SSetPtr finish(const KeyFn& face_fn, const KeyFn& degen_fn);

 private:
  SimplicialSet s_;
  Caps caps_;
};

struct SimplicialMap {
  SSetPtr src, tgt;
  std::vector<std::vector<int32_t>> at;  // per degree 0..top

  int32_t apply(int k, int32_t s) const { return at[k][s]; }
  // commutation with all faces and degeneracies; throws on failure
  void validate() const;
};

SimplicialMap identity_map(SSetPtr X);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// one simplex in every degree
SSetPtr point_space(int top_degree);

// Nerve of a finite category truncated at top_degree: n-simplices are
// composable arrow strings; 0-simplices the objects.
SSetPtr nerve_of_category(const FiniteCategory& C, int top_degree,
                          const Caps& caps = {});
SSetPtr nerve_of_poset(int n_obj, const std::vector<std::pair<int, int>>& rel,
                       int top_degree, const Caps& caps = {});

// A group of simplicial automorphisms given by generators (per-degree
// permutations). validate() checks bijectivity and commutation.
struct SimplicialAction {
  SSetPtr space;
  std::vector<std::vector<std::vector<int32_t>>> perms;  // [gen][k][s]
  void validate() const;
};

// Action induced on a tuple-keyed simplicial set by a permutation of the
// underlying element indices (entrywise on keys).
SimplicialAction tuple_entry_action(SSetPtr X,
                                    const std::vector<std::vector<Elt>>& elt_perms);

// Simplices of the quotient are orbits; the key of an orbit is the minimal
// member index. Returns the quotient with the projection map.
struct QuotientResult {
  SSetPtr quotient;
  SimplicialMap projection;
};
QuotientResult quotient_by_action(const SimplicialAction& action);

// same keys, faces and degeneracies degreewise
bool levelwise_equal(const SimplicialSet& X, const SimplicialSet& Y);

}  // namespace bcom
