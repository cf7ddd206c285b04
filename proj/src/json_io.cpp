#include "bcom/json_io.hpp"

#include <fstream>

#include "bcom/errors.hpp"

namespace bcom {

json group_to_json(const FiniteGroup& G) {
  json j;
  if (!G.name().empty()) j["name"] = G.name();
  j["order"] = G.order();
  json mul = json::array();
  for (int a = 0; a < G.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < G.order(); ++b) row.push_back(G.mul(a, b));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  j["labels"] = G.labels();
  return j;
}

FiniteGroup group_from_json(const json& j) {
  if (!j.contains("order") || !j.contains("mul"))
    throw ValidationError("group JSON needs 'order' and 'mul'");
  const int n = j.at("order").get<int>();
  std::vector<std::vector<Elt>> mul;
  for (const auto& row : j.at("mul"))
    mul.push_back(row.get<std::vector<Elt>>());
  if (static_cast<int>(mul.size()) != n)
    throw ValidationError("group JSON: 'mul' size does not match 'order'");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  std::string name = j.value("name", std::string{});
  return FiniteGroup::from_table(mul, std::move(labels), std::move(name));
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open group file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ValidationError("bad JSON in '" + path + "': " + e.what());
  }
  return group_from_json(j);
}

json sset_to_json(const SimplicialSet& X) {
  json j;
  j["max_degree"] = X.top_degree();
  json dims = json::array(), simplices = json::array();
  for (int k = 0; k <= X.top_degree(); ++k) {
    dims.push_back(X.dim(k));
    json level = json::array();
    for (int32_t s = 0; s < X.dim(k); ++s) level.push_back(X.key(k, s));
    simplices.push_back(std::move(level));
  }
  j["dims"] = std::move(dims);
  j["simplices"] = std::move(simplices);
  json face = json::array(), degen = json::array();
  for (int k = 1; k <= X.top_degree(); ++k) {
    json per_i = json::array();
    for (int i = 0; i <= k; ++i) {
      json col = json::array();
      for (int32_t s = 0; s < X.dim(k); ++s) col.push_back(X.face(k, i, s));
      per_i.push_back(std::move(col));
    }
    face.push_back(std::move(per_i));
  }
  for (int k = 0; k < X.top_degree(); ++k) {
    json per_j = json::array();
    for (int jj = 0; jj <= k; ++jj) {
      json col = json::array();
      for (int32_t s = 0; s < X.dim(k); ++s)
        col.push_back(X.degeneracy(k, jj, s));
      per_j.push_back(std::move(col));
    }
    degen.push_back(std::move(per_j));
  }
  j["face"] = std::move(face);
  j["degeneracy"] = std::move(degen);
  if (!X.meta.empty()) j["meta"] = X.meta;
  return j;
}

SSetPtr sset_from_json(const json& j) {
  const int top = j.at("max_degree").get<int>();
  SimplicialSet::Builder b(top);
  std::vector<std::vector<SimplexKey>> keys(top + 1);
  for (int k = 0; k <= top; ++k) {
    for (const auto& key : j.at("simplices").at(k)) {
      keys[k].push_back(key.get<SimplexKey>());
      b.add(k, keys[k].back());
    }
  }
  // resolve faces/degeneracies through the serialized index tables
  const auto& face = j.at("face");
  const auto& degen = j.at("degeneracy");
  auto face_fn = [&](int k, int i, const SimplexKey& key) {
    // find the simplex index by scanning the level (levels are small and
    // this runs once per table entry)
    const auto& level = keys[k];
    int32_t s = -1;
    for (size_t t = 0; t < level.size(); ++t)
      if (level[t] == key) {
        s = static_cast<int32_t>(t);
        break;
      }
    int32_t target = face.at(k - 1).at(i).at(s).get<int32_t>();
    return keys[k - 1][target];
  };
  auto degen_fn = [&](int k, int jj, const SimplexKey& key) {
    const auto& level = keys[k];
    int32_t s = -1;
    for (size_t t = 0; t < level.size(); ++t)
      if (level[t] == key) {
        s = static_cast<int32_t>(t);
        break;
      }
    int32_t target = degen.at(k).at(jj).at(s).get<int32_t>();
    return keys[k + 1][target];
  };
  SSetPtr X = b.finish(face_fn, degen_fn);
  if (j.contains("meta")) {
    auto mut = std::const_pointer_cast<SimplicialSet>(X);
    for (auto it = j.at("meta").begin(); it != j.at("meta").end(); ++it)
      mut->meta[it.key()] = it.value().get<long long>();
  }
  X->check_identities();
  return X;
}

json betti_to_json(const BettiTable& t) {
  json j;
  j["ell"] = t.ell;
  j["dims"] = t.dims;
  return j;
}

std::string betti_to_csv(const BettiTable& t) {
  std::string s = "degree,dim\n";
  for (size_t i = 0; i < t.dims.size(); ++i)
    s += std::to_string(i) + "," + std::to_string(t.dims[i]) + "\n";
  return s;
}

json diagram_to_json(const Diagram& D_) {
  if (!D_.shape.is_poset())
    throw ValidationError("only poset-shaped diagrams serialize to JSON");
  json j;
  j["objects"] = D_.shape.n_obj;
  json leq = json::array();
  for (int f = 0; f < D_.shape.n_arrows(); ++f)
    if (!D_.shape.is_identity(f))
      leq.push_back(json::array({D_.shape.arrow_src[f], D_.shape.arrow_tgt[f]}));
  j["leq"] = std::move(leq);
  json values = json::array();
  for (const auto& v : D_.values) values.push_back(sset_to_json(*v));
  j["values"] = std::move(values);
  json maps = json::array();
  for (int f = 0; f < D_.shape.n_arrows(); ++f) {
    if (D_.shape.is_identity(f)) continue;
    json m;
    m["src"] = D_.shape.arrow_src[f];
    m["tgt"] = D_.shape.arrow_tgt[f];
    m["at"] = D_.arrow_maps[f].at;
    maps.push_back(std::move(m));
  }
  j["maps"] = std::move(maps);
  return j;
}

Diagram diagram_from_json(const json& j) {
  Diagram D_;
  const int n = j.at("objects").get<int>();
  std::vector<std::pair<int, int>> rel;
  for (const auto& p : j.at("leq"))
    rel.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  D_.shape = FiniteCategory::from_poset(n, rel);
  for (const auto& v : j.at("values")) D_.values.push_back(sset_from_json(v));
  // identity maps first, then the serialized ones by endpoints
  D_.arrow_maps.resize(D_.shape.n_arrows());
  for (int f = 0; f < D_.shape.n_arrows(); ++f)
    if (D_.shape.is_identity(f))
      D_.arrow_maps[f] = identity_map(D_.values[D_.shape.arrow_src[f]]);
  for (const auto& m : j.at("maps")) {
    const int src = m.at("src").get<int>();
    const int tgt = m.at("tgt").get<int>();
    const int f = D_.shape.arrow_between(src, tgt);
    if (f < 0) throw ValidationError("diagram JSON: map without relation");
    SimplicialMap sm;
    sm.src = D_.values[src];
    sm.tgt = D_.values[tgt];
    sm.at = m.at("at").get<std::vector<std::vector<int32_t>>>();
    sm.validate();
    D_.arrow_maps[f] = std::move(sm);
  }
  for (int f = 0; f < D_.shape.n_arrows(); ++f)
    if (D_.arrow_maps[f].src == nullptr)
      throw ValidationError("diagram JSON: missing map for a relation");
  const int top = D_.values.empty() ? 0 : D_.values[0]->top_degree();
  D_.validate(top);
  return D_;
}

json check_results_to_json(const std::vector<CheckResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace bcom
