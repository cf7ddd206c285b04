#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bcom/caps.hpp"

namespace bcom {

// Column of a sparse matrix over F_ell: sorted (row, coefficient) pairs with
// nonzero coefficients.
using SparseCol = std::vector<std::pair<int32_t, uint8_t>>;

// Dense row-major matrix over F_ell for a small prime ell.
class DenseMat {
 public:
  DenseMat() = default;
  DenseMat(int rows, int cols, int ell);
  static DenseMat from_columns(const std::vector<SparseCol>& cols, int rows,
                               int ell);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int modulus() const { return ell_; }
  uint8_t get(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, uint8_t v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }

  DenseMat multiply(const DenseMat& other) const;
  bool operator==(const DenseMat& other) const = default;

  int rank() const;
  // basis of the null space, each vector of length cols()
  std::vector<std::vector<uint8_t>> kernel_basis() const;

 private:
  int rows_ = 0, cols_ = 0, ell_ = 2;
  std::vector<uint8_t> a_;
};

// Rank of a sparse column collection; elimination processes columns in
// increasing fill order (most sparse first).
int sparse_rank(const std::vector<SparseCol>& cols, int rows, int ell);

// Dispatches on caps.dense_column_limit.
int matrix_rank(const std::vector<SparseCol>& cols, int rows, int ell,
                const Caps& caps = {});

// Incremental column space over F_ell: feed columns, learn which are
// independent of the span so far.
class IncrementalSpan {
 public:
  IncrementalSpan(int n, int ell) : n_(n), ell_(ell) {}
  // if independent, stores the reduced vector and returns true
  bool add(std::vector<uint8_t> v);
  int rank() const { return static_cast<int>(basis_.size()); }

 private:
  int n_, ell_;
  std::vector<std::vector<uint8_t>> basis_;  // reduced, unit pivot
  std::vector<int> pivot_;
};

// Solves A x = b for each right-hand side, where A's columns are given
// explicitly. Throws std::logic_error if some b is not in the column span.
// Returns the coefficient matrix (one solution column per rhs).
DenseMat solve_in_span(const std::vector<std::vector<uint8_t>>& a_cols,
                       const std::vector<std::vector<uint8_t>>& rhs_cols,
                       int n_rows, int ell);

uint8_t mod_inverse(uint8_t a, int ell);

}  // namespace bcom
