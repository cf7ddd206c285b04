#include "bcom/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bcom/errors.hpp"
#include "bcom/util.hpp"

namespace bcom {

std::string BettiTable::str() const {
  std::string s = "(";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

void ChainComplex::verify_dd_zero() const {
  for (int k = 2; k <= top; ++k) {
    for (const auto& col : boundary[k]) {
      std::map<int32_t, int> acc;
      for (auto [mid, c] : col)
        for (auto [row, c2] : boundary[k - 1][mid])
          acc[row] = (acc[row] + c * c2) % ell;
      for (auto [row, v] : acc)
        if (v % ell != 0)
          throw ValidationError("boundary squared is nonzero in degree " +
                                std::to_string(k));
    }
  }
}

ChainComplex normalized_chains(const SimplicialSet& X, int ell) {
  if (!is_prime(ell)) throw ValidationError("ell must be prime");
  ChainComplex C;
  C.ell = ell;
  C.top = X.top_degree();
  C.dims.resize(C.top + 1);
  C.nd_index.resize(C.top + 1);
  C.boundary.resize(C.top + 1);
  for (int k = 0; k <= C.top; ++k) {
    C.nd_index[k].assign(X.dim(k), -1);
    const auto& nd = X.nondegenerate(k);
    for (size_t i = 0; i < nd.size(); ++i)
      C.nd_index[k][nd[i]] = static_cast<int32_t>(i);
    C.dims[k] = static_cast<int>(nd.size());
  }
  for (int k = 1; k <= C.top; ++k) {
    C.boundary[k].resize(C.dims[k]);
    const auto& nd = X.nondegenerate(k);
    for (size_t c = 0; c < nd.size(); ++c) {
      std::map<int32_t, int> acc;
      for (int i = 0; i <= k; ++i) {
        const int32_t f = X.face(k, i, nd[c]);
        const int32_t row = C.nd_index[k - 1][f];
        if (row < 0) continue;  // degenerate face
        acc[row] += (i % 2 == 0) ? 1 : ell - 1;
      }
      for (auto [row, v] : acc) {
        const int r = v % ell;
        if (r) C.boundary[k][c].emplace_back(row, static_cast<uint8_t>(r));
      }
    }
  }
  C.verify_dd_zero();
  return C;
}

int component_count(const SimplicialSet& X) {
  DisjointSets uf(X.dim(0));
  for (int32_t e = 0; e < X.dim(1); ++e)
    uf.unite(X.face(1, 0, e), X.face(1, 1, e));
  int c = 0;
  for (int32_t v = 0; v < X.dim(0); ++v)
    if (uf.find(v) == v) ++c;
  return c;
}

BettiTable betti(const SimplicialSet& X, int ell, int D, const Caps& caps) {
  if (D < 0) throw ValidationError("degree must be >= 0");
  if (X.top_degree() < D + 1)
    throw ValidationError(
        "truncation too shallow: homology through degree " + std::to_string(D) +
        " needs simplices through degree " + std::to_string(D + 1));
  ChainComplex C = normalized_chains(X, ell);
  std::vector<int> rank(D + 2, 0);
  for (int k = 1; k <= D + 1; ++k)
    rank[k] = matrix_rank(C.boundary[k], C.dims[k - 1], ell, caps);
  BettiTable T;
  T.ell = ell;
  T.dims.resize(D + 1);
  for (int n = 0; n <= D; ++n) {
    T.dims[n] = C.dims[n] - (n >= 1 ? rank[n] : 0) - rank[n + 1];
    if (T.dims[n] < 0) throw std::logic_error("negative homology dimension");
  }
  if (X.top_degree() >= 1 && T.dims[0] != component_count(X))
    throw std::logic_error("H_0 does not match component count");
  return T;
}

namespace {

std::vector<uint8_t> dense_from_sparse(const SparseCol& col, int n) {
  std::vector<uint8_t> v(n, 0);
  for (auto [r, c] : col) v[r] = c;
  return v;
}

// basis of H_n as explicit cycle vectors: kernel vectors of boundary_n that
// are independent of the image of boundary_{n+1}
struct HomologyBasis {
  std::vector<std::vector<uint8_t>> image_cols;  // spanning set of the image
  std::vector<std::vector<uint8_t>> reps;        // homology representatives
};

HomologyBasis homology_basis(const ChainComplex& C, int n) {
  HomologyBasis B;
  const int dim_n = C.dims[n];
  if (n + 1 <= C.top)
    for (const auto& col : C.boundary[n + 1])
      B.image_cols.push_back(dense_from_sparse(col, dim_n));
  std::vector<std::vector<uint8_t>> kernel;
  if (n == 0) {
    for (int i = 0; i < dim_n; ++i) {
      std::vector<uint8_t> e(dim_n, 0);
      e[i] = 1;
      kernel.push_back(std::move(e));
    }
  } else {
    DenseMat M = DenseMat::from_columns(C.boundary[n], C.dims[n - 1], C.ell);
    kernel = M.kernel_basis();
  }
  IncrementalSpan span(dim_n, C.ell);
  for (const auto& v : B.image_cols) span.add(v);
  for (auto& v : kernel)
    if (span.add(v)) B.reps.push_back(v);
  return B;
}

}  // namespace

InducedHomology induced_on_homology(const SimplicialMap& f, int ell, int D,
                                    const Caps& caps) {
  (void)caps;
  f.validate();
  if (f.src->top_degree() < D + 1 || f.tgt->top_degree() < D + 1)
    throw ValidationError("truncation too shallow for requested degree");
  ChainComplex Cs = normalized_chains(*f.src, ell);
  ChainComplex Ct = normalized_chains(*f.tgt, ell);

  InducedHomology out;
  out.ell = ell;
  out.D = D;
  out.isomorphism = true;
  for (int n = 0; n <= D; ++n) {
    HomologyBasis Bs = homology_basis(Cs, n);
    HomologyBasis Bt = homology_basis(Ct, n);
    const int bs = static_cast<int>(Bs.reps.size());
    const int bt = static_cast<int>(Bt.reps.size());
    // chain map on normalized bases: nondegenerate simplices map to their
    // images, degenerate images contribute zero
    const auto& nd_src = f.src->nondegenerate(n);
    std::vector<std::vector<uint8_t>> mapped;
    for (const auto& h : Bs.reps) {
      std::vector<uint8_t> v(Ct.dims[n], 0);
      for (size_t i = 0; i < nd_src.size(); ++i) {
        if (!h[i]) continue;
        const int32_t img = f.at[n][nd_src[i]];
        const int32_t row = Ct.nd_index[n][img];
        if (row < 0) continue;
        v[row] = static_cast<uint8_t>((v[row] + h[i]) % ell);
      }
      mapped.push_back(std::move(v));
    }
    // coordinates of each mapped cycle in the target homology basis
    std::vector<std::vector<uint8_t>> a_cols = Bt.image_cols;
    a_cols.insert(a_cols.end(), Bt.reps.begin(), Bt.reps.end());
    DenseMat M(bt, bs, ell);
    if (bs > 0) {
      if (a_cols.empty()) {
        // target homology and image are both zero; mapped cycles must vanish
        for (const auto& v : mapped)
          for (uint8_t x : v)
            if (x) throw std::logic_error("cycle mapped outside zero span");
      } else {
        DenseMat coords = solve_in_span(a_cols, mapped, Ct.dims[n], ell);
        const int offset = static_cast<int>(Bt.image_cols.size());
        for (int j = 0; j < bs; ++j)
          for (int i = 0; i < bt; ++i) M.set(i, j, coords.get(offset + i, j));
      }
    }
    out.src_betti.push_back(bs);
    out.tgt_betti.push_back(bt);
    out.map_rank.push_back(M.rank());
    if (bs != bt || out.map_rank.back() != bs) out.isomorphism = false;
    out.matrices.push_back(std::move(M));
  }
  return out;
}

}  // namespace bcom
