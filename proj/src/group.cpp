#include "bcom/group.hpp"

#include <algorithm>
#include <unordered_set>

#include "bcom/util.hpp"

namespace bcom {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elt>>& mul,
                                    std::vector<std::string> labels,
                                    std::string name) {
  FiniteGroup G;
  const int n = static_cast<int>(mul.size());
  if (n <= 0) throw ValidationError("group table is empty");
  G.n_ = n;
  G.mul_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n)
      throw ValidationError("group table row " + std::to_string(a) +
                            " has wrong length");
    for (int b = 0; b < n; ++b) {
      Elt v = mul[a][b];
      if (v < 0 || v >= n)
        throw ValidationError("group table entry mul[" + std::to_string(a) +
                              "][" + std::to_string(b) + "] = " +
                              std::to_string(v) + " is out of range");
      G.mul_[static_cast<size_t>(a) * n + b] = v;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (G.mul(0, a) != a || G.mul(a, 0) != a)
      throw ValidationError("element 0 is not a two-sided identity at element " +
                            std::to_string(a));
  }
  G.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (G.mul(a, b) == 0 && G.mul(b, a) == 0) {
        G.inv_[a] = b;
        break;
      }
    }
    if (G.inv_[a] < 0)
      throw ValidationError("element " + std::to_string(a) +
                            " has no two-sided inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Elt ab = G.mul(a, b);
      for (int c = 0; c < n; ++c) {
        if (G.mul(ab, c) != G.mul(a, G.mul(b, c)))
          throw ValidationError(
              "multiplication not associative at triple (" + std::to_string(a) +
              "," + std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }
  G.elt_order_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int k = 1;
    Elt x = a;
    while (x != 0) {
      x = G.mul(x, a);
      ++k;
    }
    G.elt_order_[a] = k;
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  } else if (static_cast<int>(labels.size()) != n) {
    throw ValidationError("label list length does not match group order");
  }
  G.labels_ = std::move(labels);
  G.name_ = std::move(name);
  return G;
}

bool FiniteGroup::is_abelian() const {
  for (Elt a = 0; a < n_; ++a)
    for (Elt b = a + 1; b < n_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

bool Subgroup::contains(Elt g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

bool Subgroup::is_abelian() const {
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (!parent->commute(members[i], members[j])) return false;
  return true;
}

Subgroup whole_group(const FiniteGroup& G) {
  Subgroup H;
  H.parent = &G;
  H.members.resize(G.order());
  for (int i = 0; i < G.order(); ++i) H.members[i] = i;
  return H;
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
  return Subgroup{&G, {0}};
}

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<Elt>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<Elt> mem;
  auto push = [&](Elt g) {
    if (!in[g]) {
      in[g] = 1;
      mem.push_back(g);
    }
  };
  push(0);
  for (Elt g : gens) push(g);
  for (size_t i = 0; i < mem.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      push(G.mul(mem[i], mem[j]));
      push(G.mul(mem[j], mem[i]));
    }
    push(G.inv(mem[i]));
  }
  std::sort(mem.begin(), mem.end());
  return Subgroup{&G, std::move(mem)};
}

bool is_subgroup(const FiniteGroup& G, const std::vector<Elt>& m) {
  if (m.empty() || m[0] != 0) return false;
  std::vector<char> in(G.order(), 0);
  for (Elt g : m) in[g] = 1;
  for (Elt a : m)
    for (Elt b : m)
      if (!in[G.mul(a, b)]) return false;
  for (Elt a : m)
    if (!in[G.inv(a)]) return false;
  return true;
}

Subgroup centralizer(const FiniteGroup& G, const std::vector<Elt>& S) {
  Subgroup C;
  C.parent = &G;
  for (Elt g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elt s : S)
      if (!G.commute(g, s)) {
        ok = false;
        break;
      }
    if (ok) C.members.push_back(g);
  }
  return C;
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  std::vector<char> in(G.order(), 0);
  for (Elt h : H.members) in[h] = 1;
  Subgroup N;
  N.parent = &G;
  for (Elt g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elt h : H.members)
      if (!in[G.conj(g, h)]) {
        ok = false;
        break;
      }
    if (ok) N.members.push_back(g);
  }
  return N;
}

Subgroup center(const FiniteGroup& G) {
  return centralizer(G, whole_group(G).members);
}

std::vector<Elt> conjugate_members(const FiniteGroup& G, Elt g,
                                   const std::vector<Elt>& members) {
  std::vector<Elt> out;
  out.reserve(members.size());
  for (Elt h : members) out.push_back(G.conj(g, h));
  std::sort(out.begin(), out.end());
  return out;
}

ConjClassTable conjugacy_classes(const FiniteGroup& G) {
  ConjClassTable T;
  T.class_of.assign(G.order(), -1);
  for (Elt a = 0; a < G.order(); ++a) {
    if (T.class_of[a] >= 0) continue;
    const int id = static_cast<int>(T.classes.size());
    std::vector<Elt> cls;
    for (Elt g = 0; g < G.order(); ++g) {
      Elt c = G.conj(g, a);
      if (T.class_of[c] < 0) {
        T.class_of[c] = id;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    T.reps.push_back(cls.front());
    T.classes.push_back(std::move(cls));
  }
  return T;
}

Subgroup ell_torsion(const Subgroup& A, int ell) {
  if (!is_prime(ell)) throw ValidationError("ell must be prime");
  if (!A.is_abelian())
    throw ValidationError(
        "ell_torsion requires an abelian subgroup; the torsion set of a "
        "nonabelian group need not be a subgroup");
  Subgroup T;
  T.parent = A.parent;
  for (Elt g : A.members) {
    int o = A.parent->element_order(g);
    while (o % ell == 0) o /= ell;
    if (o == 1) T.members.push_back(g);
  }
  return T;
}

int exponent_valuation(const FiniteGroup& G, int ell) {
  if (!is_prime(ell)) throw ValidationError("ell must be prime");
  int k = 0;
  for (Elt g = 0; g < G.order(); ++g)
    k = std::max(k, valuation(G.element_order(g), ell));
  return k;
}

bool is_cyclic(const Subgroup& A) {
  for (Elt g : A.members)
    if (A.parent->element_order(g) == A.order()) return true;
  return false;
}

int count_order_dividing(const Subgroup& A, long long m) {
  int c = 0;
  for (Elt g : A.members)
    if (m % A.parent->element_order(g) == 0) ++c;
  return c;
}

}  // namespace bcom
