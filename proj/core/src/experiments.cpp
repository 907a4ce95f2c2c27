#include "hstrata/experiments.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "hstrata/fp_roots.hpp"
#include "hstrata/rng.hpp"
#include "hstrata/sampling.hpp"

namespace hstrata {

namespace {

BinaryForm<GF> random_coeff_form(const GF& k, int n, Rng& rng) {
  BinaryForm<GF> f(k, n);
  for (int i = 0; i <= n; ++i) f.coeff(i) = rng.element(k);
  return f;
}

std::vector<std::vector<BinaryForm<GF>>> random_hb_matrix(const GF& k, int d,
                                                          const Partition& D, Rng& rng) {
  std::vector<std::vector<BinaryForm<GF>>> m(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r)
    for (int u = 0; u < d - 1; ++u)
      m[static_cast<std::size_t>(r)].push_back(random_coeff_form(k, D.part(u), rng));
  return m;
}

Partition lambda_from_degrees(const Partition& D) {
  std::vector<int> lam;
  for (int p : D.parts())
    if (p - 1 > 0) lam.push_back(p - 1);
  return Partition::from_unsorted(std::move(lam));
}

}  // namespace

HBSample sample_hilbert_burch(const GF& k, int j, int d, const Partition& D, int c,
                              std::uint64_t seed) {
  if (d < 1 || D.length() != d - 1 || D.sum() != j - c || c < 0)
    throw std::invalid_argument("sample_hilbert_burch: D must have d-1 positive parts summing to j-c");
  const HilbertTail expected = tail_from_lambda(lambda_from_degrees(D), c, j, d);

  for (int attempt = 0; attempt < 25; ++attempt) {
    Rng rng(derive_seed(seed, {0x5B1Cu, static_cast<std::uint64_t>(attempt)}));
    auto matrix = random_hb_matrix(k, d, D, rng);
    std::vector<BinaryForm<GF>> minors;
    if (d == 1) {
      BinaryForm<GF> one(k, 0);
      one.coeff(0) = k.one();
      minors.push_back(std::move(one));
    } else {
      minors = signed_minors<GF>(matrix);
    }
    BinaryForm<GF> g = (c > 0) ? random_split_form(k, c, rng) : [&] {
      BinaryForm<GF> one(k, 0);
      one.coeff(0) = k.one();
      return one;
    }();
    std::vector<BinaryForm<GF>> rows;
    rows.reserve(minors.size());
    for (const auto& m : minors) rows.push_back(c > 0 ? mul(g, m) : m);
    auto v = FormSpace<GF>::from_rows(k, j, rows);
    if (v.dim() != d) continue;
    if (hilbert_tail(v) != expected) continue;
    return HBSample{seed, j, d, D, c, std::move(matrix), std::move(g), std::move(v), attempt};
  }
  throw std::runtime_error(
      "sample_hilbert_burch: 25 degenerate draws; the stratum may be empty or p too small");
}

int jacobian_rank_dim(const GF& k, int j, int d, const Partition& D, std::uint64_t seed) {
  if (D.length() != d - 1 || D.sum() != j)
    throw std::invalid_argument("jacobian_rank_dim: need c = 0, i.e. D of d-1 parts summing to j");
  const DualGF dk{k};

  for (int attempt = 0;; ++attempt) {
    if (attempt >= 25)
      throw std::runtime_error("jacobian_rank_dim: persistent degenerate samples");
    Rng rng(derive_seed(seed, {0x7AC0u, static_cast<std::uint64_t>(attempt)}));
    auto point = random_hb_matrix(k, d, D, rng);

    // Degenerate point: dependent minors.
    auto minors0 = signed_minors<GF>(point);
    if (FormSpace<GF>::from_rows(k, j, minors0).dim() != d) continue;

    int n_params = 0;
    for (int u = 0; u < d - 1; ++u) n_params += d * (D.part(u) + 1);

    Matrix<GF> jac(k, n_params, d * (j + 1));
    int param = 0;
    for (int r = 0; r < d; ++r)
      for (int u = 0; u < d - 1; ++u)
        for (int t = 0; t <= D.part(u); ++t, ++param) {
          // Dual copy of the sample with tangent 1 on this one coefficient.
          std::vector<std::vector<BinaryForm<DualGF>>> m;
          m.reserve(static_cast<std::size_t>(d));
          for (int rr = 0; rr < d; ++rr) {
            std::vector<BinaryForm<DualGF>> row;
            for (int uu = 0; uu < d - 1; ++uu) {
              BinaryForm<DualGF> f(dk, D.part(uu));
              for (int tt = 0; tt <= D.part(uu); ++tt) {
                const auto& src = point[static_cast<std::size_t>(rr)][static_cast<std::size_t>(uu)];
                f.coeff(tt) = Dual{src.coeff(tt),
                                   (rr == r && uu == u && tt == t) ? k.one() : k.zero()};
              }
              row.push_back(std::move(f));
            }
            m.push_back(std::move(row));
          }
          auto minors = signed_minors<DualGF>(m);
          for (int mi = 0; mi < d; ++mi)
            for (int q = 0; q <= j; ++q)
              jac.at(param, mi * (j + 1) + q) = minors[static_cast<std::size_t>(mi)].coeff(q).tangent;
        }
    assert(param == n_params);
    return rank_of(jac);
  }
}

PencilReport pencil_limit(const FormSpace<GF>& v0, const FormSpace<GF>& v1,
                          std::uint64_t seed, int n_samples) {
  if (v0.j() != v1.j() || v0.dim() != v1.dim())
    throw std::invalid_argument("pencil_limit: spaces must share (j, d)");
  const GF& k = v0.field();
  const int j = v0.j(), d = v0.dim();
  HilbertTail h_special = hilbert_tail(v0);

  for (int round = 0; round < 5; ++round) {
    Rng rng(derive_seed(seed, {0x9E7Cu, static_cast<std::uint64_t>(round)}));
    std::vector<GF::Elem> ts;
    std::vector<HilbertTail> tails;
    for (int s = 0; s < n_samples; ++s) {
      GF::Elem t = rng.nonzero(k);
      Matrix<GF> m(k, d, j + 1);
      for (int r = 0; r < d; ++r)
        for (int col = 0; col <= j; ++col)
          m.at(r, col) = k.add(v0.basis().at(r, col), k.mul(t, v1.basis().at(r, col)));
      auto vt = FormSpace<GF>::from_matrix(k, j, m);
      if (vt.dim() != d) continue;  // t hit a rank-drop point of the pencil
      ts.push_back(t);
      tails.push_back(hilbert_tail(vt));
    }
    if (tails.empty()) continue;

    int len = 0;
    for (const auto& t : tails) len = std::max(len, t.length());
    std::vector<int> min_values;
    for (int i = j; i < j + len; ++i) {
      int v = tails.front().value_at(i);
      for (const auto& t : tails) v = std::min(v, t.value_at(i));
      min_values.push_back(v);
    }
    while (min_values.size() > 1 && min_values[min_values.size() - 1] == min_values[min_values.size() - 2])
      min_values.pop_back();
    bool valid = true;
    for (std::size_t i = 0; i + 1 < min_values.size(); ++i)
      if (min_values[i] <= min_values[i + 1]) valid = false;
    if (!valid) continue;  // a non-generic t slipped into the sample; redraw

    HilbertTail h_generic(j, std::move(min_values));
    bool ok = termwise_leq(h_generic, h_special);
    return PencilReport{std::move(ts), std::move(h_generic), std::move(h_special), ok};
  }
  throw std::logic_error("pencil_limit: could not draw a consistent generic sample");
}

FormSpace<GF> colon_by_form(const FormSpace<GF>& v, const BinaryForm<GF>& g) {
  const GF& k = v.field();
  const int j = v.j(), dg = g.degree();
  if (dg > j) throw std::invalid_argument("colon_by_form: divisor degree exceeds j");
  Matrix<GF> ann = kernel_basis(v.basis());
  Matrix<GF> cond(k, ann.rows(), j - dg + 1);
  for (int u = 0; u < ann.rows(); ++u)
    for (int i = 0; i + dg <= j; ++i) {
      GF::Elem s = 0;
      for (int m = 0; m <= dg; ++m) s = k.add(s, k.mul(g.coeff(m), ann.at(u, i + m)));
      cond.at(u, i) = s;
    }
  return FormSpace<GF>::from_matrix(k, j - dg, kernel_basis(cond));
}

namespace {

// Random element of the row space of `basis` that reduces to something new
// modulo `current`; nullopt after a few failed draws or when nothing new can
// exist.
std::optional<BinaryForm<GF>> random_new_element(const FormSpace<GF>& candidates,
                                                 const FormSpace<GF>& current, Rng& rng) {
  const GF& k = candidates.field();
  if (candidates.dim() == 0) return std::nullopt;
  if (candidates.dim() <= current.dim() && current.contains_space(candidates)) return std::nullopt;
  for (int tries = 0; tries < 6; ++tries) {
    BinaryForm<GF> r(k, candidates.j());
    for (int b = 0; b < candidates.dim(); ++b) {
      auto cf = rng.element(k);
      if (k.is_zero(cf)) continue;
      r = add(r, scale<GF>(cf, candidates.basis_form(b)));
    }
    if (!r.is_zero() && !current.contains(r)) return r;
  }
  return std::nullopt;
}

struct AttemptResult {
  bool success = false;
  int overflow_degree = -1;   // reduced-degree index; -1 when no overflow
  bool deterministic = false; // overflow happened before any random choice
  std::vector<int> added;     // per reduced degree j''+1, ...
};

// One greedy pass in the reduced (base-point-free target) picture: grow a
// graded family above v with exact dimensions required[m].  Additions prefer
// forms whose x- or y-multiple already lies in the next span, which keeps
// the growth of the family minimal; a fully random form is the last resort.
AttemptResult grow_ideal(const FormSpace<GF>& v, const std::vector<int>& required, Rng& rng) {
  const GF& k = v.field();
  AttemptResult res;
  bool randomness_used = false;
  FormSpace<GF> w = v;
  for (std::size_t step = 0; step < required.size(); ++step) {
    const int m = v.j() + 1 + static_cast<int>(step);
    const int need = required[step];
    FormSpace<GF> s = product_space(w, 1);
    if (s.dim() > need) {
      res.overflow_degree = m;
      res.deterministic = !randomness_used;
      return res;
    }
    int added_here = 0;
    while (s.dim() < need) {
      randomness_used = true;
      FormSpace<GF> next = product_space(s, 1);
      auto x1 = BinaryForm<GF>::monomial(k, 1, 0);
      auto y1 = BinaryForm<GF>::monomial(k, 1, 1);
      std::optional<BinaryForm<GF>> pick;
      // both multiples land in R_1 * current span
      pick = random_new_element(colon_space(next, 1), s, rng);
      // one multiple lands there
      if (!pick) pick = random_new_element(colon_by_form(next, x1), s, rng);
      if (!pick) pick = random_new_element(colon_by_form(next, y1), s, rng);
      // fully random addition
      if (!pick) {
        for (int tries = 0; tries < 6 && !pick; ++tries) {
          auto r = random_coeff_form(k, m, rng);
          if (!r.is_zero() && !s.contains(r)) pick = r;
        }
      }
      if (!pick) {
        res.overflow_degree = m;  // cannot extend; treat as a failed attempt
        return res;
      }
      auto rows = s.basis_forms();
      rows.push_back(*pick);
      s = FormSpace<GF>::from_rows(k, m, rows);
      ++added_here;
    }
    res.added.push_back(added_here);
    w = std::move(s);
  }
  res.success = true;
  return res;
}

}  // namespace

ClosureCertificate certify_closure_membership(const FormSpace<GF>& v_special,
                                              const HilbertTail& h_target,
                                              std::uint64_t seed, int retries) {
  const GF& k = v_special.field();
  const int j = v_special.j(), d = v_special.dim();
  if (h_target.j() != j || h_target.d() != d)
    throw std::invalid_argument("certify_closure_membership: target tail has different (j, d)");
  HilbertTail h_spec = hilbert_tail(v_special);

  auto [lambda_t, c_t] = lambda_of(h_target);
  auto [g_spec, c_spec] = gcd_form(v_special);

  // Required dimensions in the reduced picture (the target gcd divided out):
  // the reduced target is base-point free, so the family must grow to the
  // full ring and stays exact once it gets there.
  const int jr = j - c_t;
  const HilbertTail reduced = tail_from_lambda(lambda_t, 0, jr, d);
  std::vector<int> required;
  for (int m = jr + 1; m <= jr + reduced.length(); ++m)
    required.push_back(m + 1 - reduced.value_at(m));

  ClosureCertificate cert;
  for (int attempt = 0; attempt < retries; ++attempt) {
    cert.attempts = attempt + 1;
    Rng rng(derive_seed(seed, {0xCE87u, static_cast<std::uint64_t>(attempt)}));

    // Every element of the limit ideal is divisible by its gcd, which has
    // degree c_t and divides gcd(V_special); so additions happen in the
    // quotient by a degree-c_t divisor.  Over F_p such a divisor only exists
    // when enough linear factors split off; the choice rotates per attempt.
    FormSpace<GF> base(k, 0);
    if (c_t > 0) {
      if (c_t > c_spec) {
        cert.outcome = CertifyOutcome::overflow;  // no ideal can contain V with a larger gcd
        cert.overflow_degree = j + 1;
        return cert;
      }
      auto lf = linear_factors(g_spec, rng);
      auto g_t = divisor_from_factors(k, lf, c_t, attempt);
      if (!g_t) continue;  // gcd does not split enough over F_p
      base = colon_by_form(v_special, *g_t);
    } else {
      base = v_special;
    }
    if (base.dim() != d) continue;

    AttemptResult r = grow_ideal(base, required, rng);
    cert.overflow_degree = (r.overflow_degree >= 0) ? r.overflow_degree + c_t : -1;
    cert.added_per_degree = r.added;
    if (r.success) {
      cert.outcome = CertifyOutcome::success;
      return cert;
    }
    if (r.deterministic) {
      cert.outcome = CertifyOutcome::overflow;
      return cert;
    }
  }
  cert.outcome = CertifyOutcome::retries_exhausted;
  return cert;
}

std::vector<MuFamilyRow> mu_family_dims(int n) {
  if (n < 1) throw std::invalid_argument("mu_family_dims: need n >= 1");
  std::vector<MuFamilyRow> out;
  const int N = 3 * (n + 1);
  for (int mu = 0; mu <= n / 2; ++mu) {
    int ell = std::max(n - 2 * mu - 1, 0);
    int closed = (mu == n / 2) ? 3 * n + 3 : 2 * n + 2 * mu + 4;
    out.push_back(MuFamilyRow{n, mu, N - ell, closed});
  }
  return out;
}

}  // namespace hstrata
