#pragma once

#include <cassert>
#include <utility>
#include <vector>

#include "hstrata/field.hpp"

namespace hstrata {

/// Dense row-major matrix over a field descriptor F (GF, QQ or DualGF).
/// Sizes here are desk scale (a few hundred at most), so there is no sparse
/// or blocked machinery.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, field_.zero()) {
    assert(rows >= 0 && cols >= 0);
  }

  static Matrix identity(F field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& at(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const Elem& at(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  std::vector<Elem> row(int r) const {
    std::vector<Elem> out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
  }

  void set_row(int r, const std::vector<Elem>& v) {
    assert(static_cast<int>(v.size()) == cols_);
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
  }

  bool row_is_zero(int r) const {
    for (int c = 0; c < cols_; ++c)
      if (!field_.is_zero(at(r, c))) return false;
    return true;
  }

  /// Keep the first n rows.
  Matrix top_rows(int n) const {
    assert(n <= rows_);
    Matrix m(field_, n, cols_);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    return m;
  }

  Matrix transposed() const {
    Matrix m(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  F field_;
  int rows_;
  int cols_;
  std::vector<Elem> a_;
};

template <class F>
struct RrefResult {
  int rank = 0;
  Matrix<F> reduced;
  std::vector<int> pivot_cols;
};

/// Reduced row-echelon form by Gaussian elimination with first-nonzero
/// pivoting.  Arithmetic is exact, so no pivot-magnitude heuristics; the
/// result is the unique RREF and the routine is deterministic.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F& k = m.field();
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (k.is_unit(m.at(i, c))) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = c; j < cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
    }
    auto piv_inv = k.inv(m.at(r, c));
    for (int j = c; j < cols; ++j) m.at(r, j) = k.mul(m.at(r, j), piv_inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto f = m.at(i, c);
      if (k.is_zero(f)) continue;
      for (int j = c; j < cols; ++j)
        m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult<F>{r, std::move(m), std::move(pivots)};
}

template <class F>
int rank_of(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Basis of the right null space {v : m v = 0}, one vector per row.
/// Derived from the RREF in the standard way: one basis vector per free
/// column, with entry 1 there and the negated reduced column at the pivots.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const F& k = m.field();
  auto rr = rref(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;

  Matrix<F> basis(k, cols - rr.rank, cols);
  int out = 0;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    for (int pr = 0; pr < rr.rank; ++pr)
      basis.at(out, rr.pivot_cols[pr]) = k.neg(rr.reduced.at(pr, c));
    basis.at(out, c) = k.one();
    ++out;
  }
  assert(out + rr.rank == cols);  // rank-nullity
  return basis;
}

/// Rank of a grid of dual numbers: pivots are chosen on invertible (primal
/// nonzero) entries, so this is the rank of the primal part while tangents
/// are propagated through the elimination.
inline int rank_with_duals(const Matrix<DualGF>& m) { return rref(m).rank; }

/// Row span helper: append rows of b under a and reduce.
template <class F>
Matrix<F> stack_rows(const Matrix<F>& a, const Matrix<F>& b) {
  assert(a.cols() == b.cols());
  Matrix<F> m(a.field(), a.rows() + b.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) m.at(a.rows() + r, c) = b.at(r, c);
  return m;
}

}  // namespace hstrata
