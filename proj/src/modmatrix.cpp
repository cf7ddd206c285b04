#include "bcom/modmatrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "bcom/errors.hpp"
#include "bcom/util.hpp"

namespace bcom {

uint8_t mod_inverse(uint8_t a, int ell) {
  int x = a % ell;
  for (int y = 1; y < ell; ++y)
    if (x * y % ell == 1) return static_cast<uint8_t>(y);
  throw std::logic_error("not invertible mod ell");
}

DenseMat::DenseMat(int rows, int cols, int ell)
    : rows_(rows), cols_(cols), ell_(ell) {
  if (!is_prime(ell) || ell > 251)
    throw ValidationError("modulus must be a prime < 256");
  a_.assign(static_cast<size_t>(rows) * cols, 0);
}

DenseMat DenseMat::from_columns(const std::vector<SparseCol>& cols, int rows,
                                int ell) {
  DenseMat M(rows, static_cast<int>(cols.size()), ell);
  for (int c = 0; c < M.cols_; ++c)
    for (auto [r, v] : cols[c]) M.set(r, c, v);
  return M;
}

DenseMat DenseMat::multiply(const DenseMat& other) const {
  if (cols_ != other.rows_ || ell_ != other.ell_)
    throw ValidationError("matrix shape mismatch in multiply");
  DenseMat out(rows_, other.cols_, ell_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const int v = get(i, k);
      if (!v) continue;
      for (int j = 0; j < other.cols_; ++j) {
        int acc = out.get(i, j) + v * other.get(k, j);
        out.set(i, j, static_cast<uint8_t>(acc % ell_));
      }
    }
  return out;
}

namespace {

// forward elimination on a row-major copy; returns pivot columns
std::vector<int> echelon(std::vector<uint8_t>& a, int rows, int cols, int ell) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<size_t>(i) * cols + c]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = c; j < cols; ++j)
        std::swap(a[static_cast<size_t>(p) * cols + j],
                  a[static_cast<size_t>(r) * cols + j]);
    const uint8_t inv = mod_inverse(a[static_cast<size_t>(r) * cols + c], ell);
    for (int j = c; j < cols; ++j) {
      a[static_cast<size_t>(r) * cols + j] = static_cast<uint8_t>(
          a[static_cast<size_t>(r) * cols + j] * inv % ell);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const int f = a[static_cast<size_t>(i) * cols + c];
      if (!f) continue;
      for (int j = c; j < cols; ++j) {
        int v = a[static_cast<size_t>(i) * cols + j] -
                f * a[static_cast<size_t>(r) * cols + j] % ell;
        a[static_cast<size_t>(i) * cols + j] =
            static_cast<uint8_t>(((v % ell) + ell) % ell);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int DenseMat::rank() const {
  std::vector<uint8_t> a = a_;
  return static_cast<int>(echelon(a, rows_, cols_, ell_).size());
}

std::vector<std::vector<uint8_t>> DenseMat::kernel_basis() const {
  std::vector<uint8_t> a = a_;
  std::vector<int> pivots = echelon(a, rows_, cols_, ell_);
  std::vector<char> is_pivot(cols_, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<uint8_t>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<uint8_t> v(cols_, 0);
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) {
      const int c = pivots[i];
      const int coeff = a[i * cols_ + f];
      if (coeff) v[c] = static_cast<uint8_t>((ell_ - coeff) % ell_);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int sparse_rank(const std::vector<SparseCol>& cols, int rows, int ell) {
  (void)rows;
  std::vector<int> order(cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return cols[a].size() < cols[b].size();
  });
  // pivot row -> reduced column
  std::map<int32_t, SparseCol> pivots;
  auto axpy = [&](SparseCol& v, const SparseCol& w, int c) {
    // v -= c*w
    SparseCol out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
      if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
        out.push_back(v[i++]);
      } else if (i == v.size() || w[j].first < v[i].first) {
        int val = (ell - c * w[j].second % ell) % ell;
        if (val) out.emplace_back(w[j].first, static_cast<uint8_t>(val));
        ++j;
      } else {
        int val = ((v[i].second - c * w[j].second) % ell + ell) % ell;
        if (val) out.emplace_back(v[i].first, static_cast<uint8_t>(val));
        ++i;
        ++j;
      }
    }
    v = std::move(out);
  };
  int rank = 0;
  for (int idx : order) {
    SparseCol v = cols[idx];
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) break;
      axpy(v, it->second, v.front().second);
    }
    if (v.empty()) continue;
    const uint8_t inv = mod_inverse(v.front().second, ell);
    for (auto& e : v) e.second = static_cast<uint8_t>(e.second * inv % ell);
    pivots.emplace(v.front().first, std::move(v));
    ++rank;
  }
  return rank;
}

int matrix_rank(const std::vector<SparseCol>& cols, int rows, int ell,
                const Caps& caps) {
  if (static_cast<int>(cols.size()) <= caps.dense_column_limit) {
    return DenseMat::from_columns(cols, rows, ell).rank();
  }
  return sparse_rank(cols, rows, ell);
}

bool IncrementalSpan::add(std::vector<uint8_t> v) {
  for (size_t b = 0; b < basis_.size(); ++b) {
    const int c = v[pivot_[b]];
    if (!c) continue;
    const auto& w = basis_[b];
    for (int i = 0; i < n_; ++i) {
      int x = v[i] - c * w[i] % ell_;
      v[i] = static_cast<uint8_t>(((x % ell_) + ell_) % ell_);
    }
  }
  int p = -1;
  for (int i = 0; i < n_; ++i)
    if (v[i]) {
      p = i;
      break;
    }
  if (p < 0) return false;
  const uint8_t inv = mod_inverse(v[p], ell_);
  for (int i = 0; i < n_; ++i)
    v[i] = static_cast<uint8_t>(v[i] * inv % ell_);
  basis_.push_back(std::move(v));
  pivot_.push_back(p);
  return true;
}

DenseMat solve_in_span(const std::vector<std::vector<uint8_t>>& a_cols,
                       const std::vector<std::vector<uint8_t>>& rhs_cols,
                       int n_rows, int ell) {
  const int na = static_cast<int>(a_cols.size());
  const int nb = static_cast<int>(rhs_cols.size());
  // augmented [A | B], eliminate, back-substitute per rhs
  const int cols = na + nb;
  std::vector<uint8_t> a(static_cast<size_t>(n_rows) * cols, 0);
  for (int c = 0; c < na; ++c)
    for (int r = 0; r < n_rows; ++r)
      a[static_cast<size_t>(r) * cols + c] = a_cols[c][r];
  for (int c = 0; c < nb; ++c)
    for (int r = 0; r < n_rows; ++r)
      a[static_cast<size_t>(r) * cols + na + c] = rhs_cols[c][r];
  std::vector<int> pivots = echelon(a, n_rows, cols, ell);
  DenseMat X(na, nb, ell);
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= na)
      throw std::logic_error("right-hand side not in column span");
    for (int c = 0; c < nb; ++c)
      X.set(pivots[i], c, a[i * cols + na + c]);
  }
  // consistency: rows below the pivot count must be zero on the rhs part
  for (int r = static_cast<int>(pivots.size()); r < n_rows; ++r)
    for (int c = 0; c < nb; ++c)
      if (a[static_cast<size_t>(r) * cols + na + c])
        throw std::logic_error("right-hand side not in column span");
  return X;
}

}  // namespace bcom
