#include "bcom/category.hpp"

#include <algorithm>

#include "bcom/errors.hpp"

namespace bcom {

void FiniteCategory::validate() const {
  const int m = n_arrows();
  if (static_cast<int>(identity_arrow.size()) != n_obj)
    throw ValidationError("category: identity table size mismatch");
  for (int o = 0; o < n_obj; ++o) {
    int e = identity_arrow[o];
    if (e < 0 || e >= m || arrow_src[e] != o || arrow_tgt[e] != o)
      throw ValidationError("category: bad identity arrow at object " +
                            std::to_string(o));
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int32_t c = comp[g][f];
      bool composable = arrow_tgt[f] == arrow_src[g];
      if (composable != (c >= 0))
        throw ValidationError("category: composability mismatch");
      if (c >= 0 && (arrow_src[c] != arrow_src[f] || arrow_tgt[c] != arrow_tgt[g]))
        throw ValidationError("category: composite has wrong endpoints");
    }
  for (int f = 0; f < m; ++f) {
    if (comp[f][identity_arrow[arrow_src[f]]] != f ||
        comp[identity_arrow[arrow_tgt[f]]][f] != f)
      throw ValidationError("category: unit law fails at arrow " +
                            std::to_string(f));
  }
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (arrow_tgt[g] != arrow_src[h]) continue;
      const int32_t hg = comp[h][g];
      for (int f = 0; f < m; ++f) {
        if (arrow_tgt[f] != arrow_src[g]) continue;
        if (comp[hg][f] != comp[h][comp[g][f]])
          throw ValidationError("category: composition not associative");
      }
    }
}

bool FiniteCategory::is_poset() const {
  std::vector<std::vector<char>> seen(n_obj, std::vector<char>(n_obj, 0));
  for (int f = 0; f < n_arrows(); ++f) {
    if (seen[arrow_src[f]][arrow_tgt[f]]) return false;
    seen[arrow_src[f]][arrow_tgt[f]] = 1;
  }
  for (int a = 0; a < n_obj; ++a)
    for (int b = a + 1; b < n_obj; ++b)
      if (seen[a][b] && seen[b][a]) return false;
  return true;
}

int FiniteCategory::arrow_between(int src, int tgt) const {
  for (int f = 0; f < n_arrows(); ++f)
    if (arrow_src[f] == src && arrow_tgt[f] == tgt) return f;
  return -1;
}

FiniteCategory FiniteCategory::from_poset(
    int n_obj, const std::vector<std::pair<int, int>>& rel) {
  std::vector<std::vector<char>> leq(n_obj, std::vector<char>(n_obj, 0));
  for (int i = 0; i < n_obj; ++i) leq[i][i] = 1;
  for (auto [i, j] : rel) {
    if (i < 0 || i >= n_obj || j < 0 || j >= n_obj)
      throw ValidationError("poset relation out of range");
    leq[i][j] = 1;
  }
  for (int k = 0; k < n_obj; ++k)  // transitive closure
    for (int i = 0; i < n_obj; ++i)
      if (leq[i][k])
        for (int j = 0; j < n_obj; ++j)
          if (leq[k][j]) leq[i][j] = 1;
  for (int i = 0; i < n_obj; ++i)
    for (int j = i + 1; j < n_obj; ++j)
      if (leq[i][j] && leq[j][i])
        throw ValidationError("relation has a cycle; not a poset");

  FiniteCategory C;
  C.n_obj = n_obj;
  std::vector<std::vector<int>> arrow_id(n_obj, std::vector<int>(n_obj, -1));
  for (int i = 0; i < n_obj; ++i)
    for (int j = 0; j < n_obj; ++j)
      if (leq[i][j]) {
        arrow_id[i][j] = C.n_arrows();
        C.arrow_src.push_back(i);
        C.arrow_tgt.push_back(j);
      }
  C.identity_arrow.resize(n_obj);
  for (int i = 0; i < n_obj; ++i) C.identity_arrow[i] = arrow_id[i][i];
  const int m = C.n_arrows();
  C.comp.assign(m, std::vector<int32_t>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (C.arrow_tgt[f] == C.arrow_src[g])
        C.comp[g][f] = arrow_id[C.arrow_src[f]][C.arrow_tgt[g]];
  C.validate();
  return C;
}

FiniteCategory FiniteCategory::delooping(const FiniteGroup& G) {
  FiniteCategory C;
  C.n_obj = 1;
  const int m = G.order();
  C.arrow_src.assign(m, 0);
  C.arrow_tgt.assign(m, 0);
  C.identity_arrow = {0};
  C.comp.assign(m, std::vector<int32_t>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) C.comp[g][f] = G.mul(f, g);  // diagram order
  return C;
}

}  // namespace bcom
