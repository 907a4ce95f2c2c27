#include "hstrata/strata.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hstrata {

bool is_admissible_tail(const HilbertTail& tail, int j, int d) {
  if (tail.j() != j) return false;
  if (tail.values().front() != j + 1 - d) return false;
  int prev_e = d - 1;  // e_j, from h_{j-1} = j
  for (int i = j + 1; i <= j + tail.length(); ++i) {
    int e = tail.e(i);
    if (e < 0 || e > prev_e) return false;
    prev_e = e;
  }
  int t = tail.tau();
  return 1 <= t && t <= std::min(d, j + 2 - d);
}

std::vector<HilbertTail> admissible_tails(int j, int d) {
  if (d < 1 || d > j + 1) throw std::invalid_argument("admissible_tails: need 1 <= d <= j+1");
  const int max_parts = std::min(d, j + 2 - d) - 1;
  std::vector<HilbertTail> out;
  for (int c = 0; c <= j + 1 - d; ++c) {
    for (const Partition& lam : enumerate_partitions(j + 1 - d - c, max_parts)) {
      if (lam.empty() && c != j + 1 - d) continue;  // tau = 1 forces c = j+1-d
      HilbertTail t = tail_from_lambda(lam, c, j, d);
      assert(is_admissible_tail(t, j, d));
      out.push_back(std::move(t));
    }
  }
  return out;
}

int dim_gh_full(const std::vector<int>& h) {
  const int n = static_cast<int>(h.size());
  int rho = -1;
  for (int i = 0; i < n; ++i) {
    if (h[static_cast<std::size_t>(i)] != i + 1) {
      rho = i;
      break;
    }
  }
  if (rho < 0) throw std::invalid_argument("dim_gh_full: the zero ideal has no stratum data");
  auto at = [&](int i) {
    if (i < 0) return 0;
    return i < n ? h[static_cast<std::size_t>(i)] : h.back();
  };
  int c = h.back();
  int dim = c;
  for (int i = rho; i < n; ++i) {
    int e_i = at(i - 1) - at(i);
    int e_next = at(i) - at(i + 1);
    dim += (e_i + 1) * e_next;
  }
  return dim;
}

int dim_GH(const HilbertTail& tail) {
  std::vector<int> h;
  h.reserve(static_cast<std::size_t>(tail.j() + tail.length()));
  for (int i = 0; i < tail.j(); ++i) h.push_back(i + 1);
  for (int v : tail.values()) h.push_back(v);
  return dim_gh_full(h);
}

int cod_in_G(const Partition& D, int c, int d) {
  if (D.length() != d - 1) throw std::invalid_argument("cod_in_G: D must have d-1 parts");
  return ell_partition(D, c, d);
}

int cod_tau(int j, int d, int tau) {
  if (tau < 1 || tau > std::min(d, j + 2 - d))
    throw std::invalid_argument("cod_tau: tau outside [1, min(d, j+2-d)] (empty stratum)");
  return (d - tau) * (j + 2 - d - tau);
}

StratumDescriptor make_stratum(int j, int d, const Partition& lambda, int c) {
  StratumDescriptor s{.j = j,
                      .d = d,
                      .c = c,
                      .tau = lambda.length() + 1,
                      .lambda = lambda,
                      .D = relation_degrees(lambda, d),
                      .tail = tail_from_lambda(lambda, c, j, d),
                      .dim_stratum = 0,
                      .cod_in_G = 0,
                      .cod_in_tau = 0};
  s.dim_stratum = dim_GH(s.tail);
  s.cod_in_G = cod_in_G(s.D, c, d);
  s.cod_in_tau = ell_partition(lambda, c, d);
  assert(s.dim_stratum + s.cod_in_G == d * (j + 1 - d));
  // The tau-stratum part of the codimension is measured at the base-point
  // free quotient degree j - c; each base point itself costs d - 1.
  assert(s.cod_in_G == cod_tau(j - c, d, s.tau) + s.cod_in_tau);
  return s;
}

std::vector<int> StrataPoset::closure_set(int idx) const {
  std::vector<int> out;
  for (int u = 0; u < static_cast<int>(strata.size()); ++u)
    if (leq[static_cast<std::size_t>(idx)][static_cast<std::size_t>(u)]) out.push_back(u);
  return out;
}

int StrataPoset::index_of(const HilbertTail& tail) const {
  for (int i = 0; i < static_cast<int>(strata.size()); ++i)
    if (strata[static_cast<std::size_t>(i)].tail == tail) return i;
  return -1;
}

std::vector<std::vector<int>> StrataPoset::maximal_chains(int lo, int hi) const {
  std::vector<std::vector<int>> chains;
  std::vector<int> path{lo};
  auto dfs = [&](auto&& self, int at) -> void {
    if (at == hi) {
      chains.push_back(path);
      return;
    }
    for (auto [a, b] : hasse) {
      if (a != at) continue;
      if (!leq[static_cast<std::size_t>(b)][static_cast<std::size_t>(hi)]) continue;
      path.push_back(b);
      self(self, b);
      path.pop_back();
    }
  };
  if (leq[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)]) dfs(dfs, lo);
  return chains;
}

StrataPoset build_poset(int j, int d) {
  if (d < 1 || d > j + 1) throw std::invalid_argument("build_poset: need 1 <= d <= j+1");
  StrataPoset poset;
  poset.j = j;
  poset.d = d;

  // c ascending, then lambda lexicographically ascending: a deterministic
  // linear extension of the closure order (prefix sums only grow along lex).
  const int max_parts = std::min(d, j + 2 - d) - 1;
  for (int c = 0; c <= j + 1 - d; ++c)
    for (const Partition& lam : enumerate_partitions(j + 1 - d - c, max_parts)) {
      if (lam.empty() && c != j + 1 - d) continue;
      poset.strata.push_back(make_stratum(j, d, lam, c));
    }

  const int n = static_cast<int>(poset.strata.size());
  poset.leq.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      poset.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          termwise_leq(poset.strata[static_cast<std::size_t>(a)].tail,
                       poset.strata[static_cast<std::size_t>(b)].tail);

  // Covering edges: transitive reduction of the strict order.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !poset.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
      bool covered = true;
      for (int z = 0; z < n && covered; ++z) {
        if (z == a || z == b) continue;
        if (poset.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(z)] &&
            poset.leq[static_cast<std::size_t>(z)][static_cast<std::size_t>(b)])
          covered = false;
      }
      if (covered) poset.hasse.emplace_back(a, b);
    }
  return poset;
}

std::vector<NoseStratumDescriptor> nose_strata(int j, int d) {
  if (d < 1 || d > j + 1) throw std::invalid_argument("nose_strata: need 1 <= d <= j+1");
  const int max_tau = std::min(d, j + 2 - d);
  std::vector<NoseStratumDescriptor> out;
  for (const Partition& a : enumerate_partitions(d, max_tau)) {
    NoseStratumDescriptor ns;
    ns.j = j;
    ns.d = d;
    ns.A = a;
    ns.tau = a.length();
    ns.c = (ns.tau == 1) ? j + 1 - d : 0;
    ns.ancestor_dims.resize(static_cast<std::size_t>(j) + 1, 0);
    ns.N.resize(static_cast<std::size_t>(j) + 1, 0);
    for (int i = 0; i <= j; ++i) {
      int dim_anc = 0;  // dim of the ancestor ideal in degree j - i
      for (int p : a.parts()) dim_anc += std::max(p - i, 0);
      if (j - i >= 0) ns.ancestor_dims[static_cast<std::size_t>(j - i)] = dim_anc;
    }
    for (int i = 0; i <= j; ++i)
      ns.N[static_cast<std::size_t>(i)] = i + 1 - ns.ancestor_dims[static_cast<std::size_t>(i)];
    ns.cod_in_tau = ell_partition(a, 0, d);
    ns.dim_stratum = d * (j + 1 - d) - cod_tau(j, d, ns.tau) - ns.cod_in_tau;
    out.push_back(std::move(ns));
  }
  return out;
}

}  // namespace hstrata
