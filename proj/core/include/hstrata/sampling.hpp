#pragma once

#include "hstrata/binary_form.hpp"
#include "hstrata/form_space.hpp"
#include "hstrata/rng.hpp"

namespace hstrata {

/// Dense random form of exact degree n (nonzero).
inline BinaryForm<GF> random_form(const GF& k, int n, Rng& rng) {
  for (;;) {
    BinaryForm<GF> f(k, n);
    for (int i = 0; i <= n; ++i) f.coeff(i) = rng.element(k);
    if (!f.is_zero()) return f;
  }
}

/// Product of c random linear forms.  Splitting over F_p keeps every divisor
/// of the gcd available to the closure-certification experiments, which a
/// dense random factor of degree c would not.
inline BinaryForm<GF> random_split_form(const GF& k, int c, Rng& rng) {
  BinaryForm<GF> g(k, 0);
  g.coeff(0) = k.one();
  for (int t = 0; t < c; ++t) {
    BinaryForm<GF> lin(k, 1);
    lin.coeff(0) = rng.element(k);
    lin.coeff(1) = rng.element(k);
    if (lin.is_zero()) {
      --t;
      continue;
    }
    g = mul(g, lin);
  }
  return g;
}

/// Uniform random d-dimensional subspace of R_j (resamples on rank drop,
/// which has probability about d/p).
inline FormSpace<GF> random_form_space(const GF& k, int j, int d, Rng& rng) {
  for (;;) {
    Matrix<GF> m(k, d, j + 1);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c <= j; ++c) m.at(r, c) = rng.element(k);
    auto v = FormSpace<GF>::from_matrix(k, j, m);
    if (v.dim() == d) return v;
  }
}

}  // namespace hstrata
