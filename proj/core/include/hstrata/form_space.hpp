#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hstrata/binary_form.hpp"
#include "hstrata/matrix.hpp"

namespace hstrata {

/// A subspace V of R_j, stored as its reduced row-echelon basis matrix
/// (d rows, j+1 columns).  d = 0 is the zero subspace; it appears as a
/// component of graded slices even though Grassmannian-level operations
/// require d >= 1.
template <class F>
class FormSpace {
 public:
  FormSpace(F field, int j)
      : field_(std::move(field)), j_(j), basis_(field_, 0, j + 1) {}

  static FormSpace from_matrix(F field, int j, const Matrix<F>& raw) {
    assert(raw.cols() == j + 1);
    auto rr = rref(raw);
    FormSpace v(std::move(field), j);
    v.basis_ = rr.reduced.top_rows(rr.rank);
    return v;
  }

  static FormSpace from_rows(F field, int j, const std::vector<BinaryForm<F>>& rows) {
    Matrix<F> m(field, static_cast<int>(rows.size()), j + 1);
    for (int r = 0; r < m.rows(); ++r) {
      assert(rows[static_cast<std::size_t>(r)].degree() == j);
      m.set_row(r, rows[static_cast<std::size_t>(r)].coeffs());
    }
    return from_matrix(std::move(field), j, m);
  }

  /// All of R_j.
  static FormSpace full(F field, int j) {
    return from_matrix(field, j, Matrix<F>::identity(field, j + 1));
  }

  const F& field() const { return field_; }
  int j() const { return j_; }
  int dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }

  BinaryForm<F> basis_form(int i) const {
    return BinaryForm<F>(field_, j_, basis_.row(i));
  }

  std::vector<BinaryForm<F>> basis_forms() const {
    std::vector<BinaryForm<F>> out;
    out.reserve(static_cast<std::size_t>(dim()));
    for (int i = 0; i < dim(); ++i) out.push_back(basis_form(i));
    return out;
  }

  bool contains(const BinaryForm<F>& f) const {
    assert(f.degree() == j_);
    auto w = f.coeffs();
    for (int r = 0; r < dim(); ++r) {
      int pc = pivot_col(r);
      auto c = w[static_cast<std::size_t>(pc)];
      if (field_.is_zero(c)) continue;
      for (int i = pc; i <= j_; ++i)
        w[static_cast<std::size_t>(i)] =
            field_.sub(w[static_cast<std::size_t>(i)], field_.mul(c, basis_.at(r, i)));
    }
    for (const auto& c : w)
      if (!field_.is_zero(c)) return false;
    return true;
  }

  bool contains_space(const FormSpace& w) const {
    assert(w.j() == j_);
    for (int r = 0; r < w.dim(); ++r)
      if (!contains(w.basis_form(r))) return false;
    return true;
  }

  bool operator==(const FormSpace& o) const {
    return j_ == o.j_ && basis_ == o.basis_;  // rref bases are canonical
  }

 private:
  int pivot_col(int r) const {
    for (int c = 0; c <= j_; ++c)
      if (!field_.is_zero(basis_.at(r, c))) return c;
    assert(false && "zero row in rref basis");
    return j_;
  }

  F field_;
  int j_;
  Matrix<F> basis_;
};

/// Span of { m*f : m a monomial of degree s, f in V }  inside R_{j+s}.
template <class F>
FormSpace<F> product_space(const FormSpace<F>& v, int s) {
  assert(s >= 0);
  const F& k = v.field();
  if (s == 0) return v;
  const int j = v.j(), d = v.dim();
  Matrix<F> m(k, d * (s + 1), j + s + 1);
  for (int r = 0; r < d; ++r)
    for (int t = 0; t <= s; ++t)
      for (int i = 0; i <= j; ++i)
        m.at(r * (s + 1) + t, i + t) = v.basis().at(r, i);
  return FormSpace<F>::from_matrix(k, j + s, m);
}

/// Monic gcd of all basis forms and its degree c; c = 0 iff V is base-point
/// free.  Iterated pairwise gcd with an early exit once the gcd is constant.
template <class F>
std::pair<BinaryForm<F>, int> gcd_form(const FormSpace<F>& v) {
  if (v.dim() < 1) throw std::invalid_argument("gcd_form: zero space");
  BinaryForm<F> g = v.basis_form(0);
  for (int r = 1; r < v.dim() && g.degree() > 0; ++r) {
    g = gcd_forms(g, v.basis_form(r));
    if (g.degree() == 0) break;
  }
  g = monic(g);
  return {g, g.degree()};
}

/// V : R_k = { f in R_{j-k} | R_k * f is contained in V }, computed as the
/// kernel of the linear conditions "each monomial multiple reduces to zero
/// against the complement of V".
template <class F>
FormSpace<F> colon_space(const FormSpace<F>& v, int k) {
  const F& fld = v.field();
  const int j = v.j();
  if (k < 0 || k > j) throw std::invalid_argument("colon_space: need 0 <= k <= j");
  if (k == 0) return v;

  Matrix<F> ann = kernel_basis(v.basis());  // rows span the annihilator of V
  const int na = ann.rows();
  Matrix<F> cond(fld, (k + 1) * na, j - k + 1);
  for (int t = 0; t <= k; ++t)
    for (int u = 0; u < na; ++u)
      for (int i = 0; i + k <= j; ++i)
        cond.at(t * na + u, i) = ann.at(u, i + t);
  Matrix<F> sol = kernel_basis(cond);
  return FormSpace<F>::from_matrix(fld, j - k, sol);
}

/// Per-degree components of a graded ideal over a degree window [lo, hi].
template <class F>
struct GradedIdealSlice {
  int lo = 0;
  int hi = -1;
  std::vector<FormSpace<F>> components;

  const FormSpace<F>& at(int degree) const {
    assert(degree >= lo && degree <= hi);
    return components[static_cast<std::size_t>(degree - lo)];
  }
};

/// The ancestor ideal of V in degrees 0..j: degree j-k holds V : R_k, and
/// the degree-j component is V itself.
template <class F>
GradedIdealSlice<F> ancestor_ideal(const FormSpace<F>& v) {
  GradedIdealSlice<F> slice;
  slice.lo = 0;
  slice.hi = v.j();
  slice.components.reserve(static_cast<std::size_t>(v.j()) + 1);
  for (int i = 0; i <= v.j(); ++i)
    slice.components.push_back(colon_space(v, v.j() - i));
  return slice;
}

}  // namespace hstrata
