#include "bcom/builtin.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "bcom/fq.hpp"
#include "bcom/util.hpp"

namespace bcom {

namespace {

constexpr int kMaxBuiltinOrder = 1000;

FiniteGroup from_perms(std::vector<std::vector<int>> perms,
                       std::vector<std::string> labels, std::string name) {
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<std::vector<Elt>> mul(n, std::vector<Elt>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // apply b first, then a
      std::vector<int> c(perms[a].size());
      for (size_t i = 0; i < c.size(); ++i) c[i] = perms[a][perms[b][i]];
      mul[a][b] = index.at(c);
    }
  return FiniteGroup::from_table(mul, std::move(labels), std::move(name));
}

std::string cycle_notation(const std::vector<int>& p) {
  std::string s;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) s += " ";
      s += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

bool perm_is_even(const std::vector<int>& p) {
  int transpositions = 0;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p[j];
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

// All permutations of n letters in lexicographic one-line order (identity
// first), optionally restricted to the even ones.
FiniteGroup perm_group(int n, bool even_only, std::string name) {
  if (n < 1 || n > 5)
    throw ResourceLimitError("symmetric/alternating groups supported for n <= 5");
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<std::string> labels;
  do {
    if (even_only && !perm_is_even(base)) continue;
    perms.push_back(base);
    labels.push_back(cycle_notation(base));
  } while (std::next_permutation(base.begin(), base.end()));
  return from_perms(std::move(perms), std::move(labels), std::move(name));
}

// Matrix groups: identity first, then the remaining matrices in lexicographic
// order of (a, b, c, d) over the field encoding of fq.hpp.
FiniteGroup matrix_group(int q, bool special, std::string name) {
  const Fq F = make_fq(q);
  auto det = [&](const std::array<int, 4>& m) {
    return F.a(F.m(m[0], m[3]), F.neg[F.m(m[1], m[2])]);
  };
  std::vector<std::array<int, 4>> mats;
  const std::array<int, 4> id{1, 0, 0, 1};
  mats.push_back(id);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          std::array<int, 4> m{a, b, c, d};
          if (m == id) continue;
          int dm = det(m);
          if (special ? dm == 1 : dm != 0) mats.push_back(m);
        }
  std::map<std::array<int, 4>, int> index;
  for (size_t i = 0; i < mats.size(); ++i) index[mats[i]] = static_cast<int>(i);
  const int n = static_cast<int>(mats.size());
  std::vector<std::vector<Elt>> mul(n, std::vector<Elt>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& A = mats[x];
      const auto& B = mats[y];
      std::array<int, 4> C{
          F.a(F.m(A[0], B[0]), F.m(A[1], B[2])),
          F.a(F.m(A[0], B[1]), F.m(A[1], B[3])),
          F.a(F.m(A[2], B[0]), F.m(A[3], B[2])),
          F.a(F.m(A[2], B[1]), F.m(A[3], B[3]))};
      mul[x][y] = index.at(C);
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& m : mats)
    labels.push_back("[[" + F.labels[m[0]] + "," + F.labels[m[1]] + "],[" +
                     F.labels[m[2]] + "," + F.labels[m[3]] + "]]");
  return FiniteGroup::from_table(mul, std::move(labels), std::move(name));
}

}  // namespace

FiniteGroup cyclic_group(int m) {
  if (m < 1) throw ValidationError("cyclic group order must be >= 1");
  if (m > kMaxBuiltinOrder) throw ResourceLimitError("cyclic group too large");
  std::vector<std::vector<Elt>> mul(m, std::vector<Elt>(m));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < m; ++b) mul[a][b] = (a + b) % m;
  }
  return FiniteGroup::from_table(mul, std::move(labels), "C" + std::to_string(m));
}

FiniteGroup klein_four() {
  FiniteGroup G = product_group(cyclic_group(2), cyclic_group(2));
  return FiniteGroup::from_table(
      [&] {
        std::vector<std::vector<Elt>> mul(4, std::vector<Elt>(4));
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) mul[a][b] = G.mul(a, b);
        return mul;
      }(),
      G.labels(), "V4");
}

FiniteGroup symmetric_group(int n) {
  return perm_group(n, false, "S" + std::to_string(n));
}

FiniteGroup alternating_group(int n) {
  return perm_group(n, true, "A" + std::to_string(n));
}

// Rotations r^j at indices 0..n-1, reflections r^j s at indices n..2n-1,
// realized as permutations of the n-gon vertices.
FiniteGroup dihedral_group(int n) {
  if (n < 3)
    throw ValidationError("dihedral D<n> requires n >= 3 (use C2 or V4 instead)");
  if (2 * n > kMaxBuiltinOrder) throw ResourceLimitError("dihedral group too large");
  std::vector<std::vector<int>> perms;
  std::vector<std::string> labels;
  for (int j = 0; j < n; ++j) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + j) % n;
    perms.push_back(p);
    labels.push_back(j == 0 ? "e" : "r^" + std::to_string(j));
  }
  for (int j = 0; j < n; ++j) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = (j + n - i) % n;
    perms.push_back(p);
    labels.push_back(j == 0 ? "s" : "r^" + std::to_string(j) + " s");
  }
  return from_perms(std::move(perms), std::move(labels),
                    "D" + std::to_string(n));
}

// Element order: 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion_group() {
  // axis products: axis_mul[a][b] and the sign picked up
  static const int axis_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {
      {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  auto idx = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
  std::vector<std::vector<Elt>> mul(8, std::vector<Elt>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = a / 2, bx = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign_mul[ax][bx];
      mul[a][b] = idx(axis_mul[ax][bx], sign);
    }
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup::from_table(mul, std::move(labels), "Q8");
}

FiniteGroup gl2(int q) { return matrix_group(q, false, "GL2:" + std::to_string(q)); }
FiniteGroup sl2(int q) { return matrix_group(q, true, "SL2:" + std::to_string(q)); }

// Pairs (a, b) at index a*|B| + b.
FiniteGroup product_group(const FiniteGroup& A, const FiniteGroup& B) {
  const int na = A.order(), nb = B.order(), n = na * nb;
  if (n > kMaxBuiltinOrder) throw ResourceLimitError("product group too large");
  std::vector<std::vector<Elt>> mul(n, std::vector<Elt>(n));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      labels.push_back("(" + A.label(a) + "," + B.label(b) + ")");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      mul[x][y] = A.mul(x / nb, y / nb) * nb + B.mul(x % nb, y % nb);
  std::string name = A.name() + "x" + B.name();
  return FiniteGroup::from_table(mul, std::move(labels), std::move(name));
}

std::vector<Elt> diagonal_torus_members(const FiniteGroup& G, int q) {
  const Fq F = make_fq(q);
  const long long gl_order =
      static_cast<long long>(q * q - 1) * (q * q - q);
  const bool special = G.order() != gl_order;
  auto det = [&](int a, int b, int c, int d) {
    return F.a(F.m(a, d), F.neg[F.m(b, c)]);
  };
  // reproduce the builder's element ordering to recover indices
  std::vector<std::array<int, 4>> mats;
  mats.push_back({1, 0, 0, 1});
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          if (a == 1 && b == 0 && c == 0 && d == 1) continue;
          int dm = det(a, b, c, d);
          if (special ? dm == 1 : dm != 0) mats.push_back({a, b, c, d});
        }
  if (static_cast<int>(mats.size()) != G.order())
    throw ValidationError("group is not GL2/SL2 over F_" + std::to_string(q));
  std::vector<Elt> out;
  for (size_t i = 0; i < mats.size(); ++i)
    if (mats[i][1] == 0 && mats[i][2] == 0) out.push_back(static_cast<Elt>(i));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct AutoSearch {
  const FiniteGroup& G;
  std::vector<Elt> gens;
  // expr[g]: how g was produced during closure: (-1,-1) identity,
  // (-2, i) the i-th generator, (a, b) product of earlier elements
  std::vector<std::pair<Elt, Elt>> expr;
  std::vector<Elt> closure_order;
  std::vector<std::vector<Elt>> found;

  explicit AutoSearch(const FiniteGroup& g) : G(g) {}

  void build_generators() {
    std::vector<char> in(G.order(), 0);
    expr.assign(G.order(), {-1, -1});
    auto close = [&] {
      closure_order.clear();
      std::fill(in.begin(), in.end(), 0);
      in[0] = 1;
      closure_order.push_back(0);
      for (size_t gi = 0; gi < gens.size(); ++gi)
        if (!in[gens[gi]]) {
          in[gens[gi]] = 1;
          expr[gens[gi]] = {-2, static_cast<Elt>(gi)};
          closure_order.push_back(gens[gi]);
        }
      for (size_t i = 0; i < closure_order.size(); ++i)
        for (size_t j = 0; j < closure_order.size(); ++j) {
          Elt p = G.mul(closure_order[i], closure_order[j]);
          if (!in[p]) {
            in[p] = 1;
            expr[p] = {closure_order[i], closure_order[j]};
            closure_order.push_back(p);
          }
        }
    };
    close();
    while (static_cast<int>(closure_order.size()) < G.order()) {
      for (Elt g = 0; g < G.order(); ++g)
        if (!in[g]) {
          gens.push_back(g);
          break;
        }
      close();
    }
  }

  bool extend(const std::vector<Elt>& gen_images, std::vector<Elt>& phi) {
    phi.assign(G.order(), -1);
    phi[0] = 0;
    for (Elt g : closure_order) {
      auto [a, b] = expr[g];
      if (a == -1) continue;
      phi[g] = (a == -2) ? gen_images[b] : G.mul(phi[a], phi[b]);
    }
    std::vector<char> hit(G.order(), 0);
    for (Elt g = 0; g < G.order(); ++g) {
      if (phi[g] < 0 || hit[phi[g]]) return false;
      hit[phi[g]] = 1;
    }
    for (Elt a = 0; a < G.order(); ++a)
      for (Elt b = 0; b < G.order(); ++b)
        if (phi[G.mul(a, b)] != G.mul(phi[a], phi[b])) return false;
    return true;
  }

  void search(size_t k, std::vector<Elt>& images) {
    if (k == gens.size()) {
      std::vector<Elt> phi;
      if (extend(images, phi)) found.push_back(std::move(phi));
      return;
    }
    for (Elt c = 0; c < G.order(); ++c) {
      if (G.element_order(c) != G.element_order(gens[k])) continue;
      images[k] = c;
      search(k + 1, images);
    }
  }
};

}  // namespace

std::vector<std::vector<Elt>> automorphism_group(const FiniteGroup& G,
                                                 int max_order) {
  if (G.order() > max_order)
    throw ResourceLimitError("automorphism search restricted to small groups");
  AutoSearch s(G);
  s.build_generators();
  std::vector<Elt> images(s.gens.size(), 0);
  s.search(0, images);
  return s.found;
}

FiniteGroup builtin_group(const std::string& spec) {
  std::string u;
  for (char c : spec) u += static_cast<char>(std::toupper(c));
  // products
  if (auto pos = u.find('X'); pos != std::string::npos) {
    FiniteGroup left = builtin_group(u.substr(0, pos));
    FiniteGroup right = builtin_group(u.substr(pos + 1));
    return product_group(left, right);
  }
  auto num_after = [&](size_t k) {
    if (k >= u.size()) throw ValidationError("missing parameter in group spec '" + spec + "'");
    for (size_t i = k; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i])))
        throw ValidationError("bad group spec '" + spec + "'");
    return std::stoi(u.substr(k));
  };
  if (u == "V4") return klein_four();
  if (u == "Q8") return quaternion_group();
  if (u.rfind("GL2:", 0) == 0) return gl2(num_after(4));
  if (u.rfind("SL2:", 0) == 0) return sl2(num_after(4));
  if (!u.empty() && u[0] == 'C') return cyclic_group(num_after(1));
  if (!u.empty() && u[0] == 'S') return symmetric_group(num_after(1));
  if (!u.empty() && u[0] == 'A') return alternating_group(num_after(1));
  if (!u.empty() && u[0] == 'D') return dihedral_group(num_after(1));
  throw ValidationError("unknown group spec '" + spec + "'");
}

}  // namespace bcom
