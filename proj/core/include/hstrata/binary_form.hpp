#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hstrata/field.hpp"

namespace hstrata {

/// Homogeneous binary form of fixed degree n over the field F, stored as the
/// dense coefficient list c_0..c_n with c_i the coefficient of x^(n-i) y^i.
/// The zero form keeps its nominal degree so graded slices stay aligned.
template <class F>
class BinaryForm {
 public:
  using Elem = typename F::Elem;

  BinaryForm(F field, int degree)
      : field_(std::move(field)), degree_(degree),
        coeffs_(static_cast<std::size_t>(degree) + 1, field_.zero()) {
    assert(degree >= 0);
  }

  BinaryForm(F field, int degree, std::vector<Elem> coeffs)
      : field_(std::move(field)), degree_(degree), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != degree + 1)
      throw std::invalid_argument("BinaryForm: coefficient list length must be degree+1");
  }

  /// x^(n-i) y^i.
  static BinaryForm monomial(F field, int degree, int i) {
    BinaryForm f(field, degree);
    f.coeffs_[static_cast<std::size_t>(i)] = f.field_.one();
    return f;
  }

  const F& field() const { return field_; }
  int degree() const { return degree_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  const Elem& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Elem& coeff(int i) { return coeffs_[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (const Elem& c : coeffs_)
      if (!field_.is_zero(c)) return false;
    return true;
  }

  /// Largest power of x dividing the form; degree+1 for the zero form.
  int x_valuation() const {
    for (int i = degree_; i >= 0; --i)
      if (!field_.is_zero(coeff(i))) return degree_ - i;
    return degree_ + 1;
  }

  bool operator==(const BinaryForm& o) const {
    return degree_ == o.degree_ && coeffs_ == o.coeffs_;
  }

 private:
  F field_;
  int degree_;
  std::vector<Elem> coeffs_;
};

template <class F>
BinaryForm<F> add(const BinaryForm<F>& a, const BinaryForm<F>& b) {
  assert(a.degree() == b.degree());
  BinaryForm<F> r = a;
  for (int i = 0; i <= a.degree(); ++i)
    r.coeff(i) = a.field().add(a.coeff(i), b.coeff(i));
  return r;
}

template <class F>
BinaryForm<F> scale(const typename F::Elem& s, const BinaryForm<F>& a) {
  BinaryForm<F> r = a;
  for (int i = 0; i <= a.degree(); ++i) r.coeff(i) = a.field().mul(s, a.coeff(i));
  return r;
}

template <class F>
BinaryForm<F> neg(const BinaryForm<F>& a) {
  BinaryForm<F> r = a;
  for (int i = 0; i <= a.degree(); ++i) r.coeff(i) = a.field().neg(a.coeff(i));
  return r;
}

template <class F>
BinaryForm<F> mul(const BinaryForm<F>& a, const BinaryForm<F>& b) {
  const F& k = a.field();
  BinaryForm<F> r(k, a.degree() + b.degree());
  for (int i = 0; i <= a.degree(); ++i) {
    if (k.is_zero(a.coeff(i))) continue;
    for (int j = 0; j <= b.degree(); ++j)
      r.coeff(i + j) = k.add(r.coeff(i + j), k.mul(a.coeff(i), b.coeff(j)));
  }
  return r;
}

namespace univ {

// Dense univariate polynomials over the field F, for the dehomogenized
// (x = 1) cofactors: index i holds the coefficient of y^i.  Kept internal to
// the gcd and exact-division routines.

template <class F>
int poly_degree(const F& k, const std::vector<typename F::Elem>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!k.is_zero(p[static_cast<std::size_t>(i)])) return i;
  return -1;
}

template <class F>
void poly_trim(const F& k, std::vector<typename F::Elem>& p) {
  p.resize(static_cast<std::size_t>(poly_degree(k, p) + 1));
}

/// Remainder of a by b in place of a; b must be nonzero.
template <class F>
void poly_mod(const F& k, std::vector<typename F::Elem>& a,
              const std::vector<typename F::Elem>& b) {
  int db = poly_degree(k, b);
  assert(db >= 0);
  auto lead_inv = k.inv(b[static_cast<std::size_t>(db)]);
  for (int da = poly_degree(k, a); da >= db; da = poly_degree(k, a)) {
    auto q = k.mul(a[static_cast<std::size_t>(da)], lead_inv);
    for (int i = 0; i <= db; ++i) {
      auto& t = a[static_cast<std::size_t>(da - db + i)];
      t = k.sub(t, k.mul(q, b[static_cast<std::size_t>(i)]));
    }
  }
  poly_trim(k, a);
}

/// Quotient of a by b when the division is exact; nullopt otherwise.
template <class F>
std::optional<std::vector<typename F::Elem>> poly_div_exact(
    const F& k, std::vector<typename F::Elem> a,
    const std::vector<typename F::Elem>& b) {
  int db = poly_degree(k, b);
  if (db < 0) return std::nullopt;
  int da = poly_degree(k, a);
  if (da < db) {
    if (da < 0) return std::vector<typename F::Elem>{};
    return std::nullopt;
  }
  std::vector<typename F::Elem> q(static_cast<std::size_t>(da - db) + 1, k.zero());
  auto lead_inv = k.inv(b[static_cast<std::size_t>(db)]);
  for (int d = da; d >= db; d = poly_degree(k, a)) {
    auto c = k.mul(a[static_cast<std::size_t>(d)], lead_inv);
    q[static_cast<std::size_t>(d - db)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& t = a[static_cast<std::size_t>(d - db + i)];
      t = k.sub(t, k.mul(c, b[static_cast<std::size_t>(i)]));
    }
    if (poly_degree(k, a) < 0) break;
  }
  if (poly_degree(k, a) >= 0) return std::nullopt;
  return q;
}

/// Monic gcd by the Euclidean algorithm.
template <class F>
std::vector<typename F::Elem> poly_gcd(const F& k, std::vector<typename F::Elem> a,
                                       std::vector<typename F::Elem> b) {
  poly_trim(k, a);
  poly_trim(k, b);
  while (poly_degree(k, b) >= 0) {
    poly_mod(k, a, b);
    std::swap(a, b);
  }
  int d = poly_degree(k, a);
  if (d >= 0) {
    auto li = k.inv(a[static_cast<std::size_t>(d)]);
    for (auto& c : a) c = k.mul(c, li);
  }
  return a;
}

}  // namespace univ

/// Dehomogenize at x = 1: the coefficient of y^i as a univariate polynomial.
template <class F>
std::vector<typename F::Elem> dehomogenize(const BinaryForm<F>& f) {
  auto p = f.coeffs();
  univ::poly_trim(f.field(), p);
  return p;
}

/// The form x^(n - deg p) * p(y/x) * x^deg p of exact degree n.
template <class F>
BinaryForm<F> homogenize(const F& k, const std::vector<typename F::Elem>& p, int degree) {
  BinaryForm<F> f(k, degree);
  assert(univ::poly_degree(k, p) <= degree);
  for (std::size_t i = 0; i < p.size(); ++i) f.coeff(static_cast<int>(i)) = p[i];
  return f;
}

/// Normalize so that the first nonzero coefficient (highest x power) is 1.
template <class F>
BinaryForm<F> monic(const BinaryForm<F>& f) {
  for (int i = 0; i <= f.degree(); ++i) {
    if (!f.field().is_zero(f.coeff(i)))
      return scale<F>(f.field().inv(f.coeff(i)), f);
  }
  return f;
}

/// Gcd of two homogeneous forms.  The x power is handled separately: naive
/// dehomogenization at x = 1 cannot see common x factors, so those are split
/// off by valuation and the cofactors run through univariate Euclid in y.
template <class F>
BinaryForm<F> gcd_forms(const BinaryForm<F>& a, const BinaryForm<F>& b) {
  const F& k = a.field();
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  int vx = std::min(a.x_valuation(), b.x_valuation());
  auto u = univ::poly_gcd(k, dehomogenize(a), dehomogenize(b));
  int du = univ::poly_degree(k, u);
  return monic(homogenize(k, u, vx + du));
}

/// Exact quotient f / g as forms, or nullopt when g does not divide f.
template <class F>
std::optional<BinaryForm<F>> divide_exact(const BinaryForm<F>& f, const BinaryForm<F>& g) {
  const F& k = f.field();
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) {
    if (f.degree() < g.degree()) return std::nullopt;
    return BinaryForm<F>(k, f.degree() - g.degree());
  }
  if (g.x_valuation() > f.x_valuation()) return std::nullopt;
  auto q = univ::poly_div_exact(k, dehomogenize(f), dehomogenize(g));
  if (!q) return std::nullopt;
  return homogenize(k, *q, f.degree() - g.degree());
}

template <class F>
std::string to_string(const BinaryForm<F>& f)
  requires std::is_same_v<F, GF>
{
  std::string s;
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.field().is_zero(f.coeff(i))) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(f.coeff(i));
    int xe = f.degree() - i, ye = i;
    if (xe) s += "*x^" + std::to_string(xe);
    if (ye) s += "*y^" + std::to_string(ye);
  }
  return s.empty() ? "0" : s;
}

}  // namespace hstrata
