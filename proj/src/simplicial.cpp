#include "bcom/simplicial.hpp"

#include <algorithm>

#include "bcom/errors.hpp"

namespace bcom {

int32_t SimplicialSet::index_of(int k, const SimplexKey& key) const {
  if (k < 0 || k > top_) return -1;
  auto it = index_[k].find(key);
  return it == index_[k].end() ? -1 : it->second;
}

void SimplicialSet::compute_degeneracy_flags() {
  degenerate_.assign(top_ + 1, {});
  nondeg_.assign(top_ + 1, {});
  for (int k = 0; k <= top_; ++k) {
    degenerate_[k].assign(dim(k), 0);
    if (k >= 1) {
      for (int32_t s = 0; s < dim(k); ++s) {
        for (int j = 0; j < k; ++j) {
          // s is degenerate iff s = s_j d_j s for some j
          if (degen_[k - 1][j][face_[k][j][s]] == s) {
            degenerate_[k][s] = 1;
            break;
          }
        }
      }
    }
    for (int32_t s = 0; s < dim(k); ++s)
      if (!degenerate_[k][s]) nondeg_[k].push_back(s);
  }
}

void SimplicialSet::check_identities() const {
  auto fail = [](const std::string& what) {
    throw ValidationError("simplicial identity violated: " + what);
  };
  for (int k = 2; k <= top_; ++k)
    for (int32_t s = 0; s < dim(k); ++s)
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          if (face(k - 1, i, face(k, j, s)) != face(k - 1, j - 1, face(k, i, s)))
            fail("d_i d_j, degree " + std::to_string(k));
  for (int k = 0; k + 2 <= top_; ++k)
    for (int32_t s = 0; s < dim(k); ++s)
      for (int i = 0; i <= k; ++i)
        for (int j = i; j <= k; ++j)
          if (degeneracy(k + 1, i, degeneracy(k, j, s)) !=
              degeneracy(k + 1, j + 1, degeneracy(k, i, s)))
            fail("s_i s_j, degree " + std::to_string(k));
  for (int k = 0; k + 1 <= top_; ++k)
    for (int32_t s = 0; s < dim(k); ++s)
      for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= k + 1; ++i) {
          int32_t v = face(k + 1, i, degeneracy(k, j, s));
          int32_t expect;
          if (i < j)
            expect = (k >= 1) ? degeneracy(k - 1, j - 1, face(k, i, s)) : -2;
          else if (i == j || i == j + 1)
            expect = s;
          else
            expect = (k >= 1) ? degeneracy(k - 1, j, face(k, i - 1, s)) : -2;
          if (expect != -2 && v != expect)
            fail("d_i s_j, degree " + std::to_string(k));
        }
}

SimplicialSet::Builder::Builder(int top_degree, const Caps& caps) : caps_(caps) {
  if (top_degree < 0) throw ValidationError("top degree must be >= 0");
  s_.top_ = top_degree;
  s_.keys_.assign(top_degree + 1, {});
  s_.index_.assign(top_degree + 1, {});
}

int32_t SimplicialSet::Builder::add(int k, SimplexKey key) {
  auto& idx = s_.index_[k];
  auto it = idx.find(key);
  if (it != idx.end()) return it->second;
  const int32_t id = static_cast<int32_t>(s_.keys_[k].size());
  if (id >= caps_.max_simplices)
    throw ResourceLimitError("simplex count exceeds cap in degree " +
                             std::to_string(k));
  idx.emplace(key, id);
  s_.keys_[k].push_back(std::move(key));
  return id;
}

int SimplicialSet::Builder::dim(int k) const {
  return static_cast<int>(s_.keys_[k].size());
}

SSetPtr SimplicialSet::Builder::finish(const KeyFn& face_fn,
                                       const KeyFn& degen_fn) {
  const int top = s_.top_;
  s_.face_.assign(top + 1, {});
  s_.degen_.assign(top + 1, {});
  for (int k = 1; k <= top; ++k) {
    s_.face_[k].assign(k + 1, std::vector<int32_t>(s_.keys_[k].size()));
    for (int i = 0; i <= k; ++i)
      for (int32_t s = 0; s < dim(k); ++s) {
        auto key = face_fn(k, i, s_.keys_[k][s]);
        auto it = s_.index_[k - 1].find(key);
        if (it == s_.index_[k - 1].end())
          throw std::logic_error("face of stored simplex is not stored");
        s_.face_[k][i][s] = it->second;
      }
  }
  for (int k = 0; k < top; ++k) {
    s_.degen_[k].assign(k + 1, std::vector<int32_t>(s_.keys_[k].size()));
    for (int j = 0; j <= k; ++j)
      for (int32_t s = 0; s < dim(k); ++s) {
        auto key = degen_fn(k, j, s_.keys_[k][s]);
        auto it = s_.index_[k + 1].find(key);
        if (it == s_.index_[k + 1].end())
          throw std::logic_error("degeneracy of stored simplex is not stored");
        s_.degen_[k][j][s] = it->second;
      }
  }
  s_.compute_degeneracy_flags();
  return std::make_shared<SimplicialSet>(std::move(s_));
}

void SimplicialMap::validate() const {
  const int top = std::min(src->top_degree(), tgt->top_degree());
  if (static_cast<int>(at.size()) < top + 1)
    throw ValidationError("simplicial map: missing degrees");
  for (int k = 0; k <= top; ++k) {
    if (static_cast<int>(at[k].size()) != src->dim(k))
      throw ValidationError("simplicial map: wrong level size");
    for (int32_t s = 0; s < src->dim(k); ++s)
      if (at[k][s] < 0 || at[k][s] >= tgt->dim(k))
        throw ValidationError("simplicial map: image out of range");
  }
  for (int k = 1; k <= top; ++k)
    for (int32_t s = 0; s < src->dim(k); ++s)
      for (int i = 0; i <= k; ++i)
        if (tgt->face(k, i, at[k][s]) != at[k - 1][src->face(k, i, s)])
          throw ValidationError("simplicial map does not commute with faces");
  for (int k = 0; k < top; ++k)
    for (int32_t s = 0; s < src->dim(k); ++s)
      for (int j = 0; j <= k; ++j)
        if (tgt->degeneracy(k, j, at[k][s]) != at[k + 1][src->degeneracy(k, j, s)])
          throw ValidationError(
              "simplicial map does not commute with degeneracies");
}

SimplicialMap identity_map(SSetPtr X) {
  SimplicialMap f;
  f.src = X;
  f.tgt = X;
  f.at.resize(X->top_degree() + 1);
  for (int k = 0; k <= X->top_degree(); ++k) {
    f.at[k].resize(X->dim(k));
    for (int32_t s = 0; s < X->dim(k); ++s) f.at[k][s] = s;
  }
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.tgt.get() != g.src.get())
    throw ValidationError("composed maps do not match at the middle object");
  SimplicialMap h;
  h.src = f.src;
  h.tgt = g.tgt;
  const int top = std::min(f.src->top_degree(), g.tgt->top_degree());
  h.at.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    h.at[k].resize(f.src->dim(k));
    for (int32_t s = 0; s < f.src->dim(k); ++s)
      h.at[k][s] = g.at[k][f.at[k][s]];
  }
  return h;
}

SSetPtr point_space(int top_degree) {
  SimplicialSet::Builder b(top_degree);
  for (int k = 0; k <= top_degree; ++k) b.add(k, {});
  return b.finish([](int, int, const SimplexKey&) { return SimplexKey{}; },
                  [](int, int, const SimplexKey&) { return SimplexKey{}; });
}

SSetPtr nerve_of_category(const FiniteCategory& C, int top_degree,
                          const Caps& caps) {
  SimplicialSet::Builder b(top_degree, caps);
  for (int o = 0; o < C.n_obj; ++o) b.add(0, {o});
  // composable arrow strings, lexicographic
  std::vector<int32_t> chain;
  std::function<void(int)> rec = [&](int k) {
    if (k >= 1) b.add(k, SimplexKey(chain));
    if (k == top_degree) return;
    const int from = chain.empty() ? -1 : C.arrow_tgt[chain.back()];
    for (int f = 0; f < C.n_arrows(); ++f) {
      if (!chain.empty() && C.arrow_src[f] != from) continue;
      chain.push_back(f);
      rec(k + 1);
      chain.pop_back();
    }
  };
  rec(0);
  auto face_fn = [&C](int k, int i, const SimplexKey& key) {
    if (k == 1) return SimplexKey{i == 0 ? C.arrow_tgt[key[0]] : C.arrow_src[key[0]]};
    SimplexKey out;
    if (i == 0) {
      out.assign(key.begin() + 1, key.end());
    } else if (i == k) {
      out.assign(key.begin(), key.end() - 1);
    } else {
      out = key;
      out[i - 1] = C.compose(key[i], key[i - 1]);
      out.erase(out.begin() + i);
    }
    return out;
  };
  auto degen_fn = [&C](int k, int j, const SimplexKey& key) {
    if (k == 0) return SimplexKey{C.identity_arrow[key[0]]};
    // object at position j along the string
    int obj = (j == 0) ? C.arrow_src[key[0]] : C.arrow_tgt[key[j - 1]];
    SimplexKey out = key;
    out.insert(out.begin() + j, C.identity_arrow[obj]);
    return out;
  };
  return b.finish(face_fn, degen_fn);
}

SSetPtr nerve_of_poset(int n_obj, const std::vector<std::pair<int, int>>& rel,
                       int top_degree, const Caps& caps) {
  return nerve_of_category(FiniteCategory::from_poset(n_obj, rel), top_degree,
                           caps);
}

void SimplicialAction::validate() const {
  const int top = space->top_degree();
  for (const auto& g : perms) {
    if (static_cast<int>(g.size()) != top + 1)
      throw ValidationError("action: permutation missing degrees");
    for (int k = 0; k <= top; ++k) {
      if (static_cast<int>(g[k].size()) != space->dim(k))
        throw ValidationError("action: wrong permutation size");
      std::vector<char> hit(space->dim(k), 0);
      for (int32_t s = 0; s < space->dim(k); ++s) {
        int32_t t = g[k][s];
        if (t < 0 || t >= space->dim(k) || hit[t])
          throw ValidationError("action: not a bijection");
        hit[t] = 1;
      }
    }
    for (int k = 1; k <= top; ++k)
      for (int32_t s = 0; s < space->dim(k); ++s)
        for (int i = 0; i <= k; ++i)
          if (space->face(k, i, g[k][s]) != g[k - 1][space->face(k, i, s)])
            throw ValidationError("action does not commute with faces");
    for (int k = 0; k < top; ++k)
      for (int32_t s = 0; s < space->dim(k); ++s)
        for (int j = 0; j <= k; ++j)
          if (space->degeneracy(k, j, g[k][s]) !=
              g[k + 1][space->degeneracy(k, j, s)])
            throw ValidationError("action does not commute with degeneracies");
  }
}

SimplicialAction tuple_entry_action(
    SSetPtr X, const std::vector<std::vector<Elt>>& elt_perms) {
  SimplicialAction a;
  a.space = X;
  for (const auto& p : elt_perms) {
    std::vector<std::vector<int32_t>> g(X->top_degree() + 1);
    for (int k = 0; k <= X->top_degree(); ++k) {
      g[k].resize(X->dim(k));
      for (int32_t s = 0; s < X->dim(k); ++s) {
        SimplexKey key = X->key(k, s);
        for (auto& e : key) e = p[e];
        int32_t t = X->index_of(k, key);
        if (t < 0)
          throw ValidationError(
              "element permutation does not preserve the simplex set");
        g[k][s] = t;
      }
    }
    a.perms.push_back(std::move(g));
  }
  a.validate();
  return a;
}

QuotientResult quotient_by_action(const SimplicialAction& action) {
  action.validate();
  const SimplicialSet& X = *action.space;
  const int top = X.top_degree();
  std::vector<DisjointSets> uf;
  uf.reserve(top + 1);
  for (int k = 0; k <= top; ++k) uf.emplace_back(X.dim(k));
  for (const auto& g : action.perms)
    for (int k = 0; k <= top; ++k)
      for (int32_t s = 0; s < X.dim(k); ++s) uf[k].unite(s, g[k][s]);

  // orbit ids in order of minimal representative
  std::vector<std::vector<int32_t>> orbit_of(top + 1);
  std::vector<std::vector<int32_t>> reps(top + 1);
  for (int k = 0; k <= top; ++k) {
    orbit_of[k].assign(X.dim(k), -1);
    for (int32_t s = 0; s < X.dim(k); ++s) {
      int32_t r = uf[k].find(s);
      if (orbit_of[k][r] < 0) {
        orbit_of[k][r] = static_cast<int32_t>(reps[k].size());
        reps[k].push_back(r);
      }
      orbit_of[k][s] = orbit_of[k][r];
    }
  }

  SimplicialSet::Builder b(top);
  for (int k = 0; k <= top; ++k)
    for (int32_t r : reps[k]) b.add(k, {r});
  auto face_fn = [&](int k, int i, const SimplexKey& key) {
    return SimplexKey{reps[k - 1][orbit_of[k - 1][X.face(k, i, key[0])]]};
  };
  auto degen_fn = [&](int k, int j, const SimplexKey& key) {
    return SimplexKey{reps[k + 1][orbit_of[k + 1][X.degeneracy(k, j, key[0])]]};
  };
  QuotientResult out;
  out.quotient = b.finish(face_fn, degen_fn);
  out.projection.src = action.space;
  out.projection.tgt = out.quotient;
  out.projection.at.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    out.projection.at[k].resize(X.dim(k));
    for (int32_t s = 0; s < X.dim(k); ++s)
      out.projection.at[k][s] = orbit_of[k][s];
  }
  out.projection.validate();
  return out;
}

bool levelwise_equal(const SimplicialSet& X, const SimplicialSet& Y) {
  if (X.top_degree() != Y.top_degree()) return false;
  const int top = X.top_degree();
  for (int k = 0; k <= top; ++k) {
    if (X.dim(k) != Y.dim(k)) return false;
    for (int32_t s = 0; s < X.dim(k); ++s)
      if (Y.index_of(k, X.key(k, s)) < 0) return false;
  }
  // compare structure through the key bijection
  for (int k = 1; k <= top; ++k)
    for (int32_t s = 0; s < X.dim(k); ++s) {
      int32_t sy = Y.index_of(k, X.key(k, s));
      for (int i = 0; i <= k; ++i)
        if (Y.key(k - 1, Y.face(k, i, sy)) != X.key(k - 1, X.face(k, i, s)))
          return false;
    }
  for (int k = 0; k < top; ++k)
    for (int32_t s = 0; s < X.dim(k); ++s) {
      int32_t sy = Y.index_of(k, X.key(k, s));
      for (int j = 0; j <= k; ++j)
        if (Y.key(k + 1, Y.degeneracy(k, j, sy)) !=
            X.key(k + 1, X.degeneracy(k, j, s)))
          return false;
    }
  return true;
}

}  // namespace bcom
