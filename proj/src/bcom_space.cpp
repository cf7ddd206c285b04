#include "bcom/bcom_space.hpp"

#include <algorithm>

#include "bcom/util.hpp"

namespace bcom {

namespace {

std::vector<Elt> candidate_set(const FiniteGroup& G, const TauSpec& tau,
                               const std::vector<Elt>& universe) {
  std::vector<Elt> base = universe;
  if (base.empty()) {
    base.resize(G.order());
    for (int i = 0; i < G.order(); ++i) base[i] = i;
  }
  if (tau.kind == TauSpec::Kind::ZMod) {
    std::vector<Elt> out;
    for (Elt g : base)
      if (tau.param % G.element_order(g) == 0) out.push_back(g);
    return out;
  }
  return base;
}

void check_estimate(size_t universe, size_t cand, int n, const Caps& caps) {
  if (n <= 0) return;
  long long est = static_cast<long long>(universe);
  for (int i = 1; i < n; ++i) {
    est = (est > caps.max_tuple_estimate / std::max<long long>(1, cand))
              ? caps.max_tuple_estimate + 1
              : est * static_cast<long long>(cand);
    if (est > caps.max_tuple_estimate) break;
  }
  if (est > caps.max_tuple_estimate)
    throw ResourceLimitError("tuple enumeration estimate exceeds cap");
}

// Depth-first enumeration; every node of the tree is one tuple, so a single
// pass to depth `top` collects all degrees at once.
void enumerate_tuples(const FiniteGroup& G, bool commuting,
                      const std::vector<Elt>& cand, int top,
                      std::vector<std::vector<std::vector<Elt>>>& out) {
  std::vector<Elt> partial;
  std::function<void(const std::vector<Elt>&)> rec =
      [&](const std::vector<Elt>& avail) {
        const int k = static_cast<int>(partial.size());
        out[k].push_back(partial);
        if (k == top) return;
        for (Elt c : avail) {
          partial.push_back(c);
          if (commuting) {
            std::vector<Elt> next;
            next.reserve(avail.size());
            for (Elt x : avail)
              if (G.commute(x, c)) next.push_back(x);
            rec(next);
          } else {
            rec(avail);
          }
          partial.pop_back();
        }
      };
  rec(cand);
}

std::vector<std::vector<std::vector<Elt>>> hom_sets_through(
    const FiniteGroup& G, TauSpec tau, int top,
    const std::vector<Elt>& universe, const Caps& caps) {
  caps.validate();
  if (top < 0) throw ValidationError("degree must be >= 0");
  tau = tau.resolve(G);
  const std::vector<Elt> cand = candidate_set(G, tau, universe);
  const size_t usize = universe.empty() ? G.order() : universe.size();
  check_estimate(usize, cand.size(), top, caps);
  std::vector<std::vector<std::vector<Elt>>> out(top + 1);
  enumerate_tuples(G, tau.kind != TauSpec::Kind::Free, cand, top, out);
  return out;
}

}  // namespace

std::vector<std::vector<Elt>> hom_set(const FiniteGroup& G, TauSpec tau, int n,
                                      const std::vector<Elt>& universe,
                                      const Caps& caps) {
  return hom_sets_through(G, tau, n, universe, caps)[n];
}

std::vector<Elt> tuple_face(const FiniteGroup& G, int i,
                            const std::vector<Elt>& t) {
  const int n = static_cast<int>(t.size());
  if (n < 1 || i < 0 || i > n)
    throw ValidationError("face index out of range");
  std::vector<Elt> out;
  out.reserve(n - 1);
  if (i == 0) {
    out.assign(t.begin() + 1, t.end());
  } else if (i == n) {
    out.assign(t.begin(), t.end() - 1);
  } else {
    out.assign(t.begin(), t.end());
    out[i - 1] = G.mul(t[i - 1], t[i]);
    out.erase(out.begin() + i);
  }
  return out;
}

std::vector<Elt> tuple_degeneracy(const FiniteGroup& G, int j,
                                  const std::vector<Elt>& t) {
  (void)G;
  const int n = static_cast<int>(t.size());
  if (j < 0 || j > n) throw ValidationError("degeneracy index out of range");
  std::vector<Elt> out = t;
  out.insert(out.begin() + j, 0);
  return out;
}

SSetPtr build_bcom_in(const FiniteGroup& G, const std::vector<Elt>& universe,
                      TauSpec tau, int D, const Caps& caps) {
  if (D < 0) throw ValidationError("truncation degree must be >= 0");
  const int top = D + 1;
  auto homs = hom_sets_through(G, tau, top, universe, caps);
  SimplicialSet::Builder b(top, caps);
  for (int k = 0; k <= top; ++k) {
    for (auto& t : homs[k]) b.add(k, SimplexKey(t.begin(), t.end()));
  }
  auto face_fn = [&G](int k, int i, const SimplexKey& key) {
    (void)k;
    std::vector<Elt> t(key.begin(), key.end());
    auto f = tuple_face(G, i, t);
    return SimplexKey(f.begin(), f.end());
  };
  auto degen_fn = [&G](int k, int j, const SimplexKey& key) {
    (void)k;
    std::vector<Elt> t(key.begin(), key.end());
    auto s = tuple_degeneracy(G, j, t);
    return SimplexKey(s.begin(), s.end());
  };
  return b.finish(face_fn, degen_fn);
}

SSetPtr build_bcom(const FiniteGroup& G, TauSpec tau, int D, const Caps& caps) {
  return build_bcom_in(G, {}, tau, D, caps);
}

namespace {

// legality of the induced levelwise inclusion after resolving zadic
bool inclusion_legal(const TauSpec& a, const TauSpec& b) {
  using K = TauSpec::Kind;
  if (b.kind == K::Free) return true;
  if (a.kind == K::Free) return false;
  if (b.kind == K::Z) return true;
  if (a.kind == K::Z) return false;
  return b.param % a.param == 0;  // both ZMod
}

}  // namespace

SimplicialMap inclusion_map(const FiniteGroup& G, TauSpec from, TauSpec to,
                            int D, const Caps& caps) {
  TauSpec a = from.resolve(G), b = to.resolve(G);
  if (!inclusion_legal(a, b))
    throw ValidationError("no inclusion " + from.str() + " -> " + to.str());
  SimplicialMap f;
  f.src = build_bcom(G, a, D, caps);
  f.tgt = build_bcom(G, b, D, caps);
  const int top = D + 1;
  f.at.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    f.at[k].resize(f.src->dim(k));
    for (int32_t s = 0; s < f.src->dim(k); ++s) {
      int32_t t = f.tgt->index_of(k, f.src->key(k, s));
      if (t < 0) throw std::logic_error("inclusion image missing");
      f.at[k][s] = t;
    }
  }
  f.validate();
  return f;
}

SSetPtr stabilized_adic(const FiniteGroup& G, int ell, int D, const Caps& caps) {
  if (!is_prime(ell)) throw ValidationError("ell must be prime");
  const int k = exponent_valuation(G, ell);
  SSetPtr X = build_bcom(G, TauSpec::zadic(ell).resolve(G), D, caps);
  // freshly built and uniquely owned here
  auto mut = std::const_pointer_cast<SimplicialSet>(X);
  mut->meta["adic_ell"] = ell;
  mut->meta["adic_k"] = k;
  return X;
}

}  // namespace bcom
