#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hstrata/form_space.hpp"
#include "hstrata/hilbert.hpp"
#include "hstrata/partition.hpp"

namespace hstrata {

/// Hilbert function tail of R/(V): h_i = (i+1) - dim R_{i-j} V for i >= j,
/// computed by successive multiplication with R_1 and truncated at the first
/// repetition.  Stabilization is guaranteed well before degree 2j+2; running
/// past that cap signals an arithmetic bug, not bad input.
template <class F>
HilbertTail hilbert_tail(const FormSpace<F>& v) {
  assert(v.dim() >= 1);
  const int j = v.j(), d = v.dim();
  std::vector<int> values{j + 1 - d};
  FormSpace<F> w = v;
  for (;;) {
    w = product_space(w, 1);
    int h = w.j() + 1 - w.dim();
    if (h == values.back()) break;
    if (w.j() > 2 * j + 2)
      throw std::logic_error("hilbert_tail: no stabilization by degree 2j+2");
    values.push_back(h);
  }
  HilbertTail tail(j, std::move(values));
  [[maybe_unused]] int t = tail.tau();
  assert(1 <= t && t <= std::min(d, j + 2 - d));
  return tail;
}

/// tau(V) = dim R_1 V - dim V; equals 1 + e_{j+1} and the number of
/// generators of the ancestor ideal.
template <class F>
int tau(const FormSpace<F>& v) {
  assert(v.dim() >= 1);
  int t = product_space(v, 1).dim() - v.dim();
  assert(1 <= t && t <= std::min(v.dim(), v.j() + 2 - v.dim()));
  return t;
}

/// Minimal relations among the basis forms of V: the columns of the
/// Hilbert-Burch matrix.  Column u holds forms (a_1, ..., a_d), homogeneous
/// of degree col_degrees[u], with sum_i a_i * (basis form i) = 0.
/// For c > 0 the same coefficient columns are the mu-basis of the base-point
/// free quotient V : g, which is why the degrees sum to j - c.
template <class F>
struct MuBasis {
  int j = 0;
  int d = 0;
  std::vector<std::vector<BinaryForm<F>>> columns;  // d-1 columns of d forms
  Partition col_degrees;                            // weakly decreasing, sums to j - c
  BinaryForm<F> gcd;
  int c = 0;
};

namespace detail {

// Kernel of R_s^d -> R_{j+s}, (a_u) -> sum a_u f_u.  Coordinates of a
// relation vector: index u*(s+1)+t is the coefficient of x^(s-t) y^t in a_u.
template <class F>
Matrix<F> relation_kernel(const FormSpace<F>& v, int s) {
  const F& k = v.field();
  const int j = v.j(), d = v.dim();
  Matrix<F> m(k, j + s + 1, d * (s + 1));
  for (int u = 0; u < d; ++u)
    for (int t = 0; t <= s; ++t)
      for (int i = 0; i <= j; ++i)
        m.at(i + t, u * (s + 1) + t) = v.basis().at(u, i);
  return kernel_basis(m);
}

// Images of degree-(s-1) relation vectors under multiplication by x and y,
// in degree-s coordinates.
template <class F>
Matrix<F> shift_relations(const F& k, const Matrix<F>& prev, int d, int s) {
  Matrix<F> out(k, 2 * prev.rows(), d * (s + 1));
  for (int r = 0; r < prev.rows(); ++r)
    for (int u = 0; u < d; ++u)
      for (int t = 0; t < s; ++t) {
        auto c = prev.at(r, u * s + t);
        out.at(2 * r, u * (s + 1) + t) = c;      // x * a_u
        out.at(2 * r + 1, u * (s + 1) + t + 1) = c;  // y * a_u
      }
  return out;
}

// Scale so the first nonzero coefficient (scanning forms in order, then
// coefficients) is 1.
template <class F>
void normalize_column(std::vector<BinaryForm<F>>& col) {
  const F& k = col.front().field();
  for (const auto& f : col)
    for (int i = 0; i <= f.degree(); ++i)
      if (!k.is_zero(f.coeff(i))) {
        auto s = k.inv(f.coeff(i));
        for (auto& g : col) g = scale<F>(s, g);
        return;
      }
}

}  // namespace detail

template <class F>
MuBasis<F> mu_basis(const FormSpace<F>& v) {
  const F& k = v.field();
  const int j = v.j(), d = v.dim();
  if (d < 1) throw std::invalid_argument("mu_basis: zero space");

  auto [g, c] = gcd_form(v);
  MuBasis<F> mb{j, d, {}, {}, g, c};

  std::vector<int> degrees;
  Matrix<F> prev_kernel(k, 0, 0);
  for (int s = 1; static_cast<int>(mb.columns.size()) < d - 1; ++s) {
    if (s > j + 1)
      throw std::logic_error("mu_basis: relations incomplete past degree j+1");
    Matrix<F> ker = detail::relation_kernel(v, s);
    // New minimal relations form a complement of R_1 * (relations in degree
    // s-1) inside the degree-s kernel; the count is a dimension difference
    // (Hilbert-Burch: the relation module is free, so nothing else interferes).
    Matrix<F> old_span = detail::shift_relations(k, prev_kernel, d, s);
    auto rr = rref(old_span);
    Matrix<F> reducer = rr.reduced.top_rows(rr.rank);
    std::vector<int> pivots = rr.pivot_cols;
    for (int r = 0; r < ker.rows(); ++r) {
      auto w = ker.row(r);
      for (int t = 0; t < reducer.rows(); ++t) {
        auto cf = w[static_cast<std::size_t>(pivots[static_cast<std::size_t>(t)])];
        if (k.is_zero(cf)) continue;
        for (int i = 0; i < reducer.cols(); ++i)
          w[static_cast<std::size_t>(i)] =
              k.sub(w[static_cast<std::size_t>(i)], k.mul(cf, reducer.at(t, i)));
      }
      int lead = -1;
      for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (!k.is_zero(w[static_cast<std::size_t>(i)])) {
          lead = i;
          break;
        }
      if (lead < 0) continue;
      // Keep the reduced vector both as a new mu-basis column and as an
      // additional reducer row.
      std::vector<BinaryForm<F>> col;
      for (int u = 0; u < d; ++u) {
        BinaryForm<F> a(k, s);
        for (int t = 0; t <= s; ++t) a.coeff(t) = w[static_cast<std::size_t>(u * (s + 1) + t)];
        col.push_back(std::move(a));
      }
      detail::normalize_column(col);
      mb.columns.push_back(std::move(col));
      degrees.push_back(s);
      if (static_cast<int>(mb.columns.size()) == d - 1) break;

      auto li = k.inv(w[static_cast<std::size_t>(lead)]);
      for (auto& e : w) e = k.mul(e, li);
      Matrix<F> grown(k, reducer.rows() + 1, ker.cols());
      int at = 0;
      bool placed = false;
      for (int t = 0; t < reducer.rows(); ++t) {
        if (!placed && lead < pivots[static_cast<std::size_t>(t)]) {
          grown.set_row(at++, w);
          placed = true;
        }
        grown.set_row(at++, reducer.row(t));
      }
      if (!placed) grown.set_row(at++, w);
      auto rr2 = rref(grown);
      reducer = rr2.reduced.top_rows(rr2.rank);
      pivots = rr2.pivot_cols;
    }
    prev_kernel = std::move(ker);
  }

  // Columns sorted by weakly decreasing degree, aligned with col_degrees.
  std::vector<std::size_t> order(mb.columns.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return degrees[a] > degrees[b];
  });
  std::vector<std::vector<BinaryForm<F>>> cols;
  std::vector<int> degs;
  for (std::size_t i : order) {
    cols.push_back(std::move(mb.columns[i]));
    degs.push_back(degrees[i]);
  }
  mb.columns = std::move(cols);
  mb.col_degrees = Partition(std::move(degs));
  assert(mb.col_degrees.sum() == j - mb.c);
  return mb;
}

/// Sorted relation degrees of V computed through the syzygy route.  This is
/// the independent oracle for the dictionary
/// relation_degrees(lambda_of(hilbert_tail(V))).
template <class F>
Partition degrees_from_syzygy_oracle(const FormSpace<F>& v) {
  return mu_basis(v).col_degrees;
}

namespace detail {

template <class F>
BinaryForm<F> det_forms(const F& k, const std::vector<std::vector<BinaryForm<F>>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) {
    BinaryForm<F> one(k, 0);
    one.coeff(0) = k.one();
    return one;
  }
  if (n == 1) return rows[0][0];
  // Laplace expansion along the first column; matrices here are at most 4x4.
  BinaryForm<F> result(k, 0);
  bool first = true;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::vector<BinaryForm<F>>> minor;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      minor.emplace_back(rows[i].begin() + 1, rows[i].end());
    }
    BinaryForm<F> term = mul(rows[r][0], det_forms(k, minor));
    if (r % 2 == 1) term = neg(term);
    if (first) {
      result = std::move(term);
      first = false;
    } else {
      result = add(result, term);
    }
  }
  return result;
}

}  // namespace detail

/// Signed maximal minors of a d x (d-1) matrix of forms: entry i is
/// (-1)^i times the determinant with row i deleted.  For a Hilbert-Burch
/// matrix of a base-point-free V, these span V back (the round trip).
template <class F>
std::vector<BinaryForm<F>> signed_minors(const std::vector<std::vector<BinaryForm<F>>>& m) {
  if (m.empty() || m.front().empty())
    throw std::invalid_argument("signed_minors: need a d x (d-1) matrix with d >= 2");
  const F& k = m.front().front().field();
  const std::size_t d = m.size();
  std::vector<BinaryForm<F>> out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::vector<BinaryForm<F>>> rows;
    for (std::size_t r = 0; r < d; ++r)
      if (r != i) rows.push_back(m[r]);
    BinaryForm<F> mi = detail::det_forms(k, rows);
    if (i % 2 == 1) mi = neg(mi);
    out.push_back(std::move(mi));
  }
  return out;
}

/// Minors of a mu-basis, in row-major layout (row i = basis form i of V).
/// A single form has no relations; its one minor is the unit.
template <class F>
std::vector<BinaryForm<F>> signed_minors(const MuBasis<F>& mb) {
  if (mb.d == 1) {
    BinaryForm<F> one(mb.gcd.field(), 0);
    one.coeff(0) = mb.gcd.field().one();
    return {one};
  }
  std::vector<std::vector<BinaryForm<F>>> rows;
  for (int i = 0; i < mb.d; ++i) {
    std::vector<BinaryForm<F>> row;
    for (const auto& col : mb.columns) row.push_back(col[static_cast<std::size_t>(i)]);
    rows.push_back(std::move(row));
  }
  return signed_minors<F>(rows);
}

/// The nose (scroll) data of V: N = H(R/ancestor ideal) in degrees 0..j,
/// the ancestor dimension vector, and the partition A of d with
/// conjugate(A)_{i+1} = dim anc_{j-i} - dim anc_{j-i-1}.
template <class F>
struct NoseResult {
  std::vector<int> N;              // degrees 0..j
  Partition A;                     // partition of d into tau parts
  std::vector<int> ancestor_dims;  // dim of the ancestor ideal, degrees 0..j
};

template <class F>
NoseResult<F> nose(const FormSpace<F>& v) {
  const int j = v.j();
  auto slice = ancestor_ideal(v);
  NoseResult<F> out;
  out.ancestor_dims.resize(static_cast<std::size_t>(j) + 1);
  out.N.resize(static_cast<std::size_t>(j) + 1);
  for (int i = 0; i <= j; ++i) {
    out.ancestor_dims[static_cast<std::size_t>(i)] = slice.at(i).dim();
    out.N[static_cast<std::size_t>(i)] = i + 1 - slice.at(i).dim();
  }
  std::vector<int> conj_parts;
  for (int i = 0; i <= j; ++i) {
    int lower = (j - i - 1 >= 0) ? out.ancestor_dims[static_cast<std::size_t>(j - i - 1)] : 0;
    int diff = out.ancestor_dims[static_cast<std::size_t>(j - i)] - lower;
    if (diff == 0) break;
    conj_parts.push_back(diff);
  }
  out.A = Partition(std::move(conj_parts)).conjugate();
  assert(out.A.sum() == v.dim());
  return out;
}

}  // namespace hstrata
