#include "bcom/diagram.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "bcom/errors.hpp"
#include "bcom/util.hpp"

namespace bcom {

void Diagram::validate(int required_top) const {
  shape.validate();
  if (static_cast<int>(values.size()) != shape.n_obj ||
      static_cast<int>(arrow_maps.size()) != shape.n_arrows())
    throw ValidationError("diagram: value/arrow table sizes do not match shape");
  for (const auto& v : values)
    if (v->top_degree() < required_top)
      throw ValidationError("diagram value truncation too shallow");
  for (int f = 0; f < shape.n_arrows(); ++f) {
    if (arrow_maps[f].src.get() != values[shape.arrow_src[f]].get() ||
        arrow_maps[f].tgt.get() != values[shape.arrow_tgt[f]].get())
      throw ValidationError("diagram: arrow map endpoints do not match");
    arrow_maps[f].validate();
  }
  for (int o = 0; o < shape.n_obj; ++o) {
    const auto& m = arrow_maps[shape.identity_arrow[o]];
    for (int k = 0; k <= values[o]->top_degree(); ++k)
      for (int32_t s = 0; s < values[o]->dim(k); ++s)
        if (m.at[k][s] != s)
          throw ValidationError("diagram: identity arrow is not the identity");
  }
  for (int g = 0; g < shape.n_arrows(); ++g)
    for (int f = 0; f < shape.n_arrows(); ++f) {
      if (shape.arrow_tgt[f] != shape.arrow_src[g]) continue;
      const auto& gf = arrow_maps[shape.compose(g, f)];
      for (int k = 0; k <= values[shape.arrow_src[f]]->top_degree(); ++k)
        for (int32_t s = 0; s < values[shape.arrow_src[f]]->dim(k); ++s)
          if (gf.at[k][s] != arrow_maps[g].at[k][arrow_maps[f].at[k][s]])
            throw ValidationError("diagram: arrow maps are not functorial");
    }
}

namespace {

struct KeyView {
  int c0;
  std::vector<int32_t> arrows;
  int32_t payload;
};

KeyView parse_key(const SimplexKey& key, int k) {
  KeyView v;
  v.c0 = key[0];
  v.arrows.assign(key.begin() + 1, key.begin() + 1 + k);
  v.payload = key.back();
  return v;
}

SimplexKey make_key(int c0, const std::vector<int32_t>& arrows,
                    int32_t payload) {
  SimplexKey key;
  key.reserve(arrows.size() + 2);
  key.push_back(c0);
  key.insert(key.end(), arrows.begin(), arrows.end());
  key.push_back(payload);
  return key;
}

}  // namespace

SSetPtr hocolim(const Diagram& Dg, int D, const Caps& caps) {
  if (D < 0) throw ValidationError("degree must be >= 0");
  const int top = D + 1;
  Dg.validate(top);
  const FiniteCategory& C = Dg.shape;

  SimplicialSet::Builder b(top, caps);
  // chains of n composable arrows (identities allowed), payload at the source
  std::vector<int32_t> chain;
  std::function<void(int, int)> rec = [&](int c0, int n) {
    for (int32_t p = 0; p < Dg.values[c0]->dim(n); ++p)
      b.add(n, make_key(c0, chain, p));
    if (n == top) return;
    const int at = chain.empty() ? c0 : C.arrow_tgt[chain.back()];
    for (int f = 0; f < C.n_arrows(); ++f) {
      if (C.arrow_src[f] != at) continue;
      chain.push_back(f);
      rec(c0, n + 1);
      chain.pop_back();
    }
  };
  for (int c0 = 0; c0 < C.n_obj; ++c0) rec(c0, 0);

  auto face_fn = [&](int k, int i, const SimplexKey& key) {
    KeyView v = parse_key(key, k);
    if (i == 0) {
      const int32_t f1 = v.arrows[0];
      const int c1 = C.arrow_tgt[f1];
      const int32_t pushed = Dg.arrow_maps[f1].at[k][v.payload];
      const int32_t q = Dg.values[c1]->face(k, 0, pushed);
      std::vector<int32_t> rest(v.arrows.begin() + 1, v.arrows.end());
      return make_key(c1, rest, q);
    }
    const int32_t q = Dg.values[v.c0]->face(k, i, v.payload);
    std::vector<int32_t> arrows = v.arrows;
    if (i == k) {
      arrows.pop_back();
    } else {
      arrows[i - 1] = C.compose(arrows[i], arrows[i - 1]);
      arrows.erase(arrows.begin() + i);
    }
    return make_key(v.c0, arrows, q);
  };
  auto degen_fn = [&](int k, int j, const SimplexKey& key) {
    KeyView v = parse_key(key, k);
    const int obj = (j == 0) ? v.c0 : C.arrow_tgt[v.arrows[j - 1]];
    std::vector<int32_t> arrows = v.arrows;
    arrows.insert(arrows.begin() + j, C.identity_arrow[obj]);
    const int32_t q = Dg.values[v.c0]->degeneracy(k, j, v.payload);
    return make_key(v.c0, arrows, q);
  };
  return b.finish(face_fn, degen_fn);
}

Diagram decomposition_diagram(const FiniteGroup& G, const AbelianPoset& P,
                              TauSpec tau, int D, const Caps& caps) {
  P.check_closure();
  Diagram Dg;
  Dg.shape = FiniteCategory::from_poset(P.size(), P.leq_pairs());
  Dg.values.reserve(P.size());
  const TauSpec rt = tau.resolve(G);
  for (int o = 0; o < P.size(); ++o)
    Dg.values.push_back(build_bcom_in(G, P.groups[o].members, rt, D, caps));
  const int top = D + 1;
  for (int f = 0; f < Dg.shape.n_arrows(); ++f) {
    SimplicialMap m;
    m.src = Dg.values[Dg.shape.arrow_src[f]];
    m.tgt = Dg.values[Dg.shape.arrow_tgt[f]];
    m.at.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
      m.at[k].resize(m.src->dim(k));
      for (int32_t s = 0; s < m.src->dim(k); ++s) {
        int32_t t = m.tgt->index_of(k, m.src->key(k, s));
        if (t < 0) throw std::logic_error("inclusion image missing in diagram");
        m.at[k][s] = t;
      }
    }
    Dg.arrow_maps.push_back(std::move(m));
  }
  Dg.validate(top);
  return Dg;
}

SimplicialMap assembly_map(const Diagram& Dg, SSetPtr hoco, SSetPtr target) {
  SimplicialMap a;
  a.src = hoco;
  a.tgt = target;
  const int top = std::min(hoco->top_degree(), target->top_degree());
  a.at.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    a.at[k].resize(hoco->dim(k));
    for (int32_t s = 0; s < hoco->dim(k); ++s) {
      KeyView v = parse_key(hoco->key(k, s), k);
      const SimplexKey& payload_key = Dg.values[v.c0]->key(k, v.payload);
      int32_t t = target->index_of(k, payload_key);
      if (t < 0)
        throw std::logic_error("assembly: payload simplex missing in target");
      a.at[k][s] = t;
    }
  }
  a.validate();
  return a;
}

Decomposition build_decomposition(const FiniteGroup& G, const AbelianPoset& P,
                                  TauSpec tau, int D, const Caps& caps) {
  Decomposition d;
  d.poset = P;
  progress("decomposition: building " + std::to_string(P.size()) +
           "-object diagram");
  d.diagram = decomposition_diagram(G, P, tau, D, caps);
  d.hoco = hocolim(d.diagram, D, caps);
  d.target = build_bcom(G, tau.resolve(G), D, caps);
  d.assembly = assembly_map(d.diagram, d.hoco, d.target);
  return d;
}

PosetFunctor conjugacy_collapse(const AbelianPoset& P) {
  PosetFunctor rho;
  const int nc = static_cast<int>(P.class_reps.size());
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j < P.size(); ++j)
      if (P.leq[i][j] && P.class_of[i] != P.class_of[j])
        rel.emplace_back(P.class_of[i], P.class_of[j]);
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  rho.target = FiniteCategory::from_poset(nc, rel);
  rho.obj_map = P.class_of;
  return rho;
}

namespace {

// strictly increasing object chains of a poset category, all lengths,
// ordered by (length, lexicographic)
std::vector<std::vector<int>> nondegenerate_chains(const FiniteCategory& C) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int last) {
    for (int o = 0; o < C.n_obj; ++o) {
      if (o == last) continue;
      if (last >= 0 && C.arrow_between(last, o) < 0) continue;
      cur.push_back(o);
      out.push_back(cur);
      rec(o);
      cur.pop_back();
    }
  };
  rec(-1);
  std::stable_sort(out.begin(), out.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     return a.size() < b.size();
                   });
  return out;
}

bool is_subchain(const std::vector<int>& small, const std::vector<int>& big) {
  size_t i = 0;
  for (int o : big) {
    if (i < small.size() && small[i] == o) ++i;
  }
  return i == small.size();
}

}  // namespace

Pushforward pushforward_over_discrete(const Diagram& Dg,
                                      const PosetFunctor& rho, int D,
                                      const Caps& caps) {
  const int top = D + 1;
  Dg.validate(top);
  rho.target.validate();
  if (!rho.target.is_poset())
    throw ValidationError("pushforward target must be a finite poset");
  if (static_cast<int>(rho.obj_map.size()) != Dg.shape.n_obj)
    throw ValidationError("functor object map has wrong size");
  for (int f = 0; f < Dg.shape.n_arrows(); ++f) {
    const int cs = rho.obj_map[Dg.shape.arrow_src[f]];
    const int ct = rho.obj_map[Dg.shape.arrow_tgt[f]];
    if (rho.target.arrow_between(cs, ct) < 0)
      throw ValidationError("object map is not a functor to the poset");
    if (!Dg.shape.is_identity(f) && cs == ct)
      throw ValidationError(
          "functor does not reflect identities; the nondegenerate-chain "
          "reduction needs fibers that contain no non-identity arrows");
  }

  Pushforward pf;
  pf.chain_objects = nondegenerate_chains(rho.target);
  const int nchains = static_cast<int>(pf.chain_objects.size());

  // shape': arrows from a chain to each of its subchains
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < nchains; ++a)
    for (int c = 0; c < nchains; ++c)
      if (a != c && is_subchain(pf.chain_objects[c], pf.chain_objects[a]))
        rel.emplace_back(a, c);
  pf.diagram.shape = FiniteCategory::from_poset(nchains, rel);

  // lifts: arrow strings over the chain; recorded canonically as the arrow
  // id string (or the single object for 0-chains)
  std::vector<std::vector<std::vector<int32_t>>> lift_keys(nchains);
  pf.lift_objects.resize(nchains);
  for (int ci = 0; ci < nchains; ++ci) {
    const auto& ch = pf.chain_objects[ci];
    const int k = static_cast<int>(ch.size()) - 1;
    if (k == 0) {
      for (int a = 0; a < Dg.shape.n_obj; ++a)
        if (rho.obj_map[a] == ch[0]) {
          lift_keys[ci].push_back({a});
          pf.lift_objects[ci].push_back({a});
        }
      continue;
    }
    std::vector<int32_t> arrows;
    std::function<void(int)> rec = [&](int pos) {
      if (pos == k) {
        lift_keys[ci].push_back(arrows);
        std::vector<int> objs{Dg.shape.arrow_src[arrows[0]]};
        for (int32_t f : arrows) objs.push_back(Dg.shape.arrow_tgt[f]);
        pf.lift_objects[ci].push_back(std::move(objs));
        return;
      }
      for (int f = 0; f < Dg.shape.n_arrows(); ++f) {
        if (rho.obj_map[Dg.shape.arrow_src[f]] != ch[pos] ||
            rho.obj_map[Dg.shape.arrow_tgt[f]] != ch[pos + 1])
          continue;
        if (!arrows.empty() &&
            Dg.shape.arrow_tgt[arrows.back()] != Dg.shape.arrow_src[f])
          continue;
        arrows.push_back(f);
        rec(pos + 1);
        arrows.pop_back();
      }
    };
    rec(0);
  }

  // values: disjoint unions of the payload spaces at the lift sources
  std::vector<std::unordered_map<std::vector<int32_t>, int, VecHash>> lift_index(
      nchains);
  for (int ci = 0; ci < nchains; ++ci)
    for (size_t li = 0; li < lift_keys[ci].size(); ++li)
      lift_index[ci][lift_keys[ci][li]] = static_cast<int>(li);

  auto source_of_lift = [&](int ci, int li) {
    return pf.lift_objects[ci][li][0];
  };

  pf.diagram.values.resize(nchains);
  for (int ci = 0; ci < nchains; ++ci) {
    SimplicialSet::Builder b(top, caps);
    for (size_t li = 0; li < lift_keys[ci].size(); ++li) {
      const SSetPtr& X = Dg.values[source_of_lift(ci, static_cast<int>(li))];
      for (int m = 0; m <= top; ++m)
        for (int32_t p = 0; p < X->dim(m); ++p)
          b.add(m, {static_cast<int32_t>(li), p});
    }
    auto face_fn = [&, ci](int m, int i, const SimplexKey& key) {
      const SSetPtr& X = Dg.values[source_of_lift(ci, key[0])];
      return SimplexKey{key[0], X->face(m, i, key[1])};
    };
    auto degen_fn = [&, ci](int m, int j, const SimplexKey& key) {
      const SSetPtr& X = Dg.values[source_of_lift(ci, key[0])];
      return SimplexKey{key[0], X->degeneracy(m, j, key[1])};
    };
    pf.diagram.values[ci] = b.finish(face_fn, degen_fn);
  }

  // arrow actions: restrict the lift to the subchain, pushing the payload
  // along the composite connecting the old source to the new one
  const FiniteCategory& S = pf.diagram.shape;
  pf.diagram.arrow_maps.resize(S.n_arrows());
  for (int f = 0; f < S.n_arrows(); ++f) {
    const int a = S.arrow_src[f], c = S.arrow_tgt[f];
    const auto& big = pf.chain_objects[a];
    const auto& small = pf.chain_objects[c];
    // positions of the subchain inside the chain
    std::vector<int> pos;
    {
      size_t i = 0;
      for (size_t j = 0; j < big.size() && i < small.size(); ++j)
        if (big[j] == small[i]) {
          pos.push_back(static_cast<int>(j));
          ++i;
        }
    }
    SimplicialMap m;
    m.src = pf.diagram.values[a];
    m.tgt = pf.diagram.values[c];
    m.at.resize(top + 1);
    // per-lift: derived lift id and the connecting composite arrow
    std::vector<int> derived(lift_keys[a].size());
    std::vector<int32_t> connect(lift_keys[a].size());
    for (size_t li = 0; li < lift_keys[a].size(); ++li) {
      const auto& arrows = lift_keys[a][li];
      const auto& objs = pf.lift_objects[a][li];
      int32_t alpha = Dg.shape.identity_arrow[objs[0]];
      for (int t = 0; t < pos[0]; ++t) alpha = Dg.shape.compose(arrows[t], alpha);
      std::vector<int32_t> sub;
      if (small.size() >= 2) {
        for (size_t j = 1; j < pos.size(); ++j) {
          int32_t g = Dg.shape.identity_arrow[objs[pos[j - 1]]];
          for (int t = pos[j - 1]; t < pos[j]; ++t)
            g = Dg.shape.compose(arrows[t], g);
          sub.push_back(g);
        }
      } else {
        sub = {static_cast<int32_t>(objs[pos[0]])};
      }
      auto it = lift_index[c].find(sub);
      if (it == lift_index[c].end())
        throw std::logic_error("derived lift missing in pushforward");
      derived[li] = it->second;
      connect[li] = alpha;
    }
    for (int k = 0; k <= top; ++k) {
      m.at[k].resize(m.src->dim(k));
      for (int32_t s = 0; s < m.src->dim(k); ++s) {
        const SimplexKey& key = m.src->key(k, s);
        const int li = key[0];
        const int32_t pushed = Dg.arrow_maps[connect[li]].at[k][key[1]];
        int32_t t = m.tgt->index_of(
            k, {static_cast<int32_t>(derived[li]), pushed});
        if (t < 0) throw std::logic_error("pushforward image missing");
        m.at[k][s] = t;
      }
    }
    pf.diagram.arrow_maps[f] = std::move(m);
  }
  pf.diagram.validate(top);
  return pf;
}

OrbitReport pushforward_orbit_check(const FiniteGroup& G,
                                    const AbelianPoset& P,
                                    const Diagram& Dg,
                                    const Pushforward& pf) {
  OrbitReport rep;
  std::unordered_map<std::vector<int32_t>, int, VecHash> poset_index;
  for (int i = 0; i < P.size(); ++i)
    poset_index[P.groups[i].members] = i;
  auto conj_index = [&](Elt g, int idx) {
    return poset_index.at(conjugate_members(G, g, P.groups[idx].members));
  };
  for (size_t ci = 0; ci < pf.lift_objects.size(); ++ci) {
    const auto& lifts = pf.lift_objects[ci];
    if (lifts.empty()) {
      rep.orbit_counts.push_back(0);
      continue;
    }
    std::unordered_map<std::vector<int32_t>, int, VecHash> lift_id;
    for (size_t li = 0; li < lifts.size(); ++li) {
      std::vector<int32_t> key(lifts[li].begin(), lifts[li].end());
      lift_id[key] = static_cast<int>(li);
    }
    DisjointSets uf(static_cast<int>(lifts.size()));
    for (size_t li = 0; li < lifts.size(); ++li)
      for (Elt g = 0; g < G.order(); ++g) {
        std::vector<int32_t> img;
        for (int idx : lifts[li]) img.push_back(conj_index(g, idx));
        auto it = lift_id.find(img);
        if (it == lift_id.end()) {
          rep.ok = false;
          rep.detail = "conjugate of a lift is not a lift";
          return rep;
        }
        uf.unite(static_cast<int32_t>(li), it->second);
      }
    std::vector<int> orbit_size(lifts.size(), 0);
    for (size_t li = 0; li < lifts.size(); ++li) ++orbit_size[uf.find((int32_t)li)];
    int orbits = 0;
    for (size_t li = 0; li < lifts.size(); ++li) {
      if (uf.find(static_cast<int32_t>(li)) != static_cast<int32_t>(li)) continue;
      ++orbits;
      // stabilizer of the chain = intersection of the normalizers
      int stab = 0;
      for (Elt g = 0; g < G.order(); ++g) {
        bool fixes = true;
        for (int idx : lifts[li])
          if (conj_index(g, idx) != idx) {
            fixes = false;
            break;
          }
        if (fixes) ++stab;
      }
      if (orbit_size[li] * stab != G.order()) {
        rep.ok = false;
        rep.detail = "orbit size times stabilizer order is not |G|";
        return rep;
      }
      // payload sizes are constant on the orbit
      const SSetPtr& X0 = Dg.values[lifts[li][0]];
      for (size_t lj = 0; lj < lifts.size(); ++lj) {
        if (uf.find(static_cast<int32_t>(lj)) != static_cast<int32_t>(li))
          continue;
        const SSetPtr& Xj = Dg.values[lifts[lj][0]];
        for (int m = 0; m <= X0->top_degree(); ++m)
          if (X0->nondegenerate_count(m) != Xj->nondegenerate_count(m)) {
            rep.ok = false;
            rep.detail = "payload size varies within a conjugation orbit";
            return rep;
          }
      }
    }
    // the value at the chain is exactly the union of the orbit pieces
    const SSetPtr& V = pf.diagram.values[ci];
    for (int m = 0; m <= V->top_degree(); ++m) {
      long long total = 0;
      for (size_t li = 0; li < lifts.size(); ++li)
        total += Dg.values[lifts[li][0]]->nondegenerate_count(m);
      if (total != V->nondegenerate_count(m)) {
        rep.ok = false;
        rep.detail = "pushforward value does not match the union of pieces";
        return rep;
      }
    }
    rep.orbit_counts.push_back(orbits);
  }
  return rep;
}

}  // namespace bcom
