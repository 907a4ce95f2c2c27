#include "hstrata/fp_roots.hpp"

#include <algorithm>
#include <cassert>

namespace hstrata {

namespace {

using Poly = std::vector<GF::Elem>;  // index i = coefficient of t^i

int deg(const GF& k, const Poly& p) { return univ::poly_degree(k, p); }

Poly make_monic(const GF& k, Poly p) {
  int d = deg(k, p);
  if (d < 0) return p;
  auto li = k.inv(p[static_cast<std::size_t>(d)]);
  for (auto& c : p) c = k.mul(c, li);
  p.resize(static_cast<std::size_t>(d) + 1);
  return p;
}

Poly poly_mul(const GF& k, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (k.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  }
  return r;
}

Poly poly_mulmod(const GF& k, const Poly& a, const Poly& b, const Poly& mod) {
  Poly r = poly_mul(k, a, b);
  univ::poly_mod(k, r, mod);
  return r;
}

Poly poly_powmod(const GF& k, Poly base, std::uint64_t e, const Poly& m) {
  univ::poly_mod(k, base, m);
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(k, r, base, m);
    base = poly_mulmod(k, base, base, m);
    e >>= 1;
  }
  return r;
}

// Distinct roots of a product of distinct linear factors, by equal-degree
// splitting: gcd(g, (t+delta)^((p-1)/2) - 1) separates the roots whose
// shifted value is a quadratic residue.
void split_roots(const GF& k, Poly g, Rng& rng, std::vector<GF::Elem>& out) {
  g = make_monic(k, g);
  int d = deg(k, g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(k.neg(g[0]));  // monic: t + g0
    return;
  }
  for (;;) {
    Poly shifted{rng.element(k), 1};  // t + delta
    Poly w = poly_powmod(k, shifted, (k.prime() - 1) / 2, g);
    if (!w.empty()) {
      w[0] = k.sub(w[0], 1);
    } else {
      w = Poly{k.sub(0, 1)};
    }
    Poly h = univ::poly_gcd(k, w, g);
    int dh = deg(k, h);
    if (dh <= 0 || dh >= d) continue;
    auto rest = univ::poly_div_exact(k, g, h);
    assert(rest.has_value());
    split_roots(k, h, rng, out);
    split_roots(k, *rest, rng, out);
    return;
  }
}

std::vector<GF::Elem> roots_of(const GF& k, Poly p, Rng& rng) {
  p = make_monic(k, p);
  if (deg(k, p) <= 0) return {};
  std::vector<GF::Elem> out;
  if (k.prime() <= 4096) {
    for (GF::Elem r = 0; r < k.prime(); ++r) {
      GF::Elem v = 0;
      for (int i = deg(k, p); i >= 0; --i)
        v = k.add(k.mul(v, r), p[static_cast<std::size_t>(i)]);
      if (v == 0) out.push_back(r);
    }
    return out;
  }
  // The product of the distinct linear factors of p divides t^p - t.
  Poly tp = poly_powmod(k, Poly{0, 1}, k.prime(), p);
  if (tp.size() < 2) tp.resize(2, 0);
  tp[1] = k.sub(tp[1], 1);
  Poly g = univ::poly_gcd(k, tp, p);
  split_roots(k, g, rng, out);
  return out;
}

}  // namespace

LinearFactors linear_factors(const BinaryForm<GF>& f, Rng& rng) {
  const GF& k = f.field();
  LinearFactors lf;
  if (f.is_zero()) return lf;
  lf.x_power = f.x_valuation();
  Poly p = dehomogenize(f);
  auto roots = roots_of(k, p, rng);
  std::sort(roots.begin(), roots.end());
  for (GF::Elem r : roots) {
    Poly lin{k.neg(r), 1};
    int mult = 0;
    for (;;) {
      auto q = univ::poly_div_exact(k, p, lin);
      if (!q) break;
      p = *q;
      ++mult;
    }
    lf.roots.emplace_back(r, mult);
  }
  lf.unsplit_degree = std::max(deg(k, p), 0);
  return lf;
}

std::optional<BinaryForm<GF>> divisor_from_factors(const GF& k, const LinearFactors& lf,
                                                   int degree, int rotate) {
  std::vector<std::pair<int, GF::Elem>> pool;  // (kind, root): kind 0 = the factor x
  for (int i = 0; i < lf.x_power; ++i) pool.emplace_back(0, 0);
  for (auto [r, mult] : lf.roots)
    for (int i = 0; i < mult; ++i) pool.emplace_back(1, r);
  if (static_cast<int>(pool.size()) < degree) return std::nullopt;
  if (!pool.empty())
    std::rotate(pool.begin(),
                pool.begin() + static_cast<std::ptrdiff_t>(
                                   static_cast<std::size_t>(rotate) % pool.size()),
                pool.end());

  BinaryForm<GF> g(k, 0);
  g.coeff(0) = k.one();
  for (int i = 0; i < degree; ++i) {
    auto [kind, r] = pool[static_cast<std::size_t>(i)];
    BinaryForm<GF> lin(k, 1);
    if (kind == 0) {
      lin.coeff(0) = k.one();  // x
    } else {
      lin.coeff(0) = k.neg(r);  // y - r x
      lin.coeff(1) = k.one();
    }
    g = mul(g, lin);
  }
  return g;
}

}  // namespace hstrata
