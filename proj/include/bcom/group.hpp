#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcom/errors.hpp"

namespace bcom {

using Elt = int32_t;

// A finite group given by its multiplication table. Elements are dense
// indices 0..order-1 with the identity at index 0; all algorithms work on
// indices. Immutable after construction.
class FiniteGroup {
 public:
  // Validates the table: entries in range, identity two-sided at index 0,
  // two-sided inverses, associativity (full triple loop). Throws
  // ValidationError naming the first failing element or triple.
  static FiniteGroup from_table(const std::vector<std::vector<Elt>>& mul,
                                std::vector<std::string> labels = {},
                                std::string name = {});

  int order() const { return n_; }
  Elt mul(Elt a, Elt b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  Elt conj(Elt g, Elt a) const { return mul(mul(g, a), inv(g)); }
  bool commute(Elt a, Elt b) const { return mul(a, b) == mul(b, a); }
  int element_order(Elt a) const { return elt_order_[a]; }
  bool is_abelian() const;

  const std::string& label(Elt a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }

 private:
  FiniteGroup() = default;
  int n_ = 0;
  std::vector<Elt> mul_;  // n*n row-major
  std::vector<Elt> inv_;
  std::vector<int> elt_order_;
  std::vector<std::string> labels_;
  std::string name_;
};

// A subgroup as a sorted member list; equality of subgroups is member-set
// equality. `parent` must outlive the Subgroup.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Elt> members;  // sorted, contains 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(Elt g) const;
  bool is_abelian() const;
};

struct ConjClassTable {
  std::vector<std::vector<Elt>> classes;  // sorted members per class
  std::vector<int> class_of;              // element -> class id
  std::vector<Elt> reps;                  // minimal-index member per class
};

Subgroup whole_group(const FiniteGroup& G);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<Elt>& gens);
bool is_subgroup(const FiniteGroup& G, const std::vector<Elt>& sorted_members);

Subgroup centralizer(const FiniteGroup& G, const std::vector<Elt>& S);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);
Subgroup center(const FiniteGroup& G);
std::vector<Elt> conjugate_members(const FiniteGroup& G, Elt g,
                                   const std::vector<Elt>& members);

ConjClassTable conjugacy_classes(const FiniteGroup& G);

// ell-primary torsion subgroup of an abelian subgroup. Throws for nonabelian
// input (the torsion set need not be a subgroup there).
Subgroup ell_torsion(const Subgroup& A, int ell);

// v_ell(exponent of G): the index beyond which hom sets of Z/ell^k stabilize.
int exponent_valuation(const FiniteGroup& G, int ell);

bool is_cyclic(const Subgroup& A);
// number of elements of A with g^m = e
int count_order_dividing(const Subgroup& A, long long m);

}  // namespace bcom
