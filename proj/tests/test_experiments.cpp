#include <stdexcept>

#include "doctest.h"
#include "hstrata/experiments.hpp"
#include "hstrata/fp_roots.hpp"
#include "hstrata/sampling.hpp"
#include "hstrata/strata.hpp"

using namespace hstrata;

TEST_CASE("linear factor extraction over F_p") {
  GF k;
  Rng rng(101);
  // f = x^2 * (y - 3x)^2 * (y - 7x)
  BinaryForm<GF> f = mul(BinaryForm<GF>::monomial(k, 1, 0), BinaryForm<GF>::monomial(k, 1, 0));
  BinaryForm<GF> l3(k, 1, {k.from_int(-3), 1});
  BinaryForm<GF> l7(k, 1, {k.from_int(-7), 1});
  f = mul(mul(f, l3), mul(l3, l7));
  auto lf = linear_factors(f, rng);
  CHECK(lf.x_power == 2);
  REQUIRE(lf.roots.size() == 2);
  CHECK(lf.roots[0] == std::pair<GF::Elem, int>{3, 2});
  CHECK(lf.roots[1] == std::pair<GF::Elem, int>{7, 1});
  CHECK(lf.unsplit_degree == 0);

  auto g = divisor_from_factors(k, lf, 3);
  REQUIRE(g.has_value());
  CHECK(divide_exact(f, *g).has_value());
  CHECK_FALSE(divisor_from_factors(k, lf, 6).has_value());

  // random split products round-trip through the factor list
  for (int trial = 0; trial < 10; ++trial) {
    auto s = random_split_form(k, 4, rng);
    auto fs = linear_factors(s, rng);
    int total = fs.x_power;
    for (auto [r, m] : fs.roots) total += m;
    CHECK(total == 4);
    CHECK(fs.unsplit_degree == 0);
  }
}

TEST_CASE("Hilbert-Burch samples land in the requested stratum") {
  GF k;
  auto s1 = sample_hilbert_burch(k, 6, 3, Partition({3, 3}), 0, 1);
  CHECK(hilbert_tail(s1.V) == HilbertTail(6, {4, 2, 0}));

  auto s2 = sample_hilbert_burch(k, 6, 3, Partition({5, 1}), 0, 2);
  CHECK(hilbert_tail(s2.V) == HilbertTail(6, {4, 3, 2, 1, 0}));

  auto s3 = sample_hilbert_burch(k, 6, 3, Partition({2, 2}), 2, 3);
  CHECK(hilbert_tail(s3.V) == HilbertTail(6, {4, 2}));
  CHECK(gcd_form(s3.V).second == 2);

  CHECK_THROWS_AS(sample_hilbert_burch(k, 6, 3, Partition({3, 3}), 1, 1), std::invalid_argument);
}

TEST_CASE("Hilbert-Burch sampling is reproducible and covers every stratum") {
  GF k;
  auto a = sample_hilbert_burch(k, 8, 3, Partition({4, 2}), 2, 77);
  auto b = sample_hilbert_burch(k, 8, 3, Partition({4, 2}), 2, 77);
  CHECK(a.V == b.V);

  for (auto [j, d] : {std::pair{6, 3}, std::pair{9, 4}}) {
    auto poset = build_poset(j, d);
    for (std::size_t i = 0; i < poset.strata.size(); ++i) {
      const auto& s = poset.strata[i];
      auto smp = sample_hilbert_burch(k, j, d, s.D, s.c, 1000 + i);
      CHECK(hilbert_tail(smp.V) == s.tail);
      // oracle equivalence and the minors round trip, one sample per stratum
      CHECK(degrees_from_syzygy_oracle(smp.V) == s.D);
      auto mb = mu_basis(smp.V);
      auto minors = signed_minors(mb);
      std::vector<BinaryForm<GF>> rows;
      for (const auto& m : minors) rows.push_back(mb.c > 0 ? mul(mb.gcd, m) : m);
      CHECK(FormSpace<GF>::from_rows(k, j, rows) == smp.V);
    }
  }
}

TEST_CASE("random spaces hit the generic stratum nearly always") {
  GF k;
  Rng rng(555);
  int hits = 0;
  const int trials = 300;
  auto generic = tail_from_lambda(Partition({2, 2}), 0, 6, 3);
  for (int t = 0; t < trials; ++t)
    if (hilbert_tail(random_form_space(k, 6, 3, rng)) == generic) ++hits;
  CHECK(hits >= trials * 99 / 100);
}

TEST_CASE("jacobian ranks match the codimension formula") {
  GF k;
  CHECK(jacobian_rank_dim(k, 6, 3, Partition({3, 3}), 1) == 21);
  CHECK(jacobian_rank_dim(k, 6, 3, Partition({4, 2}), 1) == 20);
  CHECK(jacobian_rank_dim(k, 6, 3, Partition({5, 1}), 1) == 18);
  for (const auto& D : enumerate_partitions(9, 3, true))
    CHECK(jacobian_rank_dim(k, 9, 4, D, 5) == 4 * 10 - cod_in_G(D, 0, 4));
}

TEST_CASE("pencil limits are semicontinuous") {
  GF k;
  Rng rng(777);

  auto v_special = sample_hilbert_burch(k, 6, 3, Partition({4, 2}), 0, 11).V;
  auto v_generic = random_form_space(k, 6, 3, rng);
  auto rep = pencil_limit(v_special, v_generic, 13);
  CHECK(rep.h_generic == HilbertTail(6, {4, 2, 0}));
  CHECK(rep.h_special == HilbertTail(6, {4, 2, 1, 0}));
  CHECK(rep.semicontinuous);

  // V0 = V1: the pencil is constant
  auto same = pencil_limit(v_special, v_special, 17);
  CHECK(same.h_generic == same.h_special);

  // base-pointed special member against a generic direction
  auto v_c2 = sample_hilbert_burch(k, 6, 3, Partition({2, 2}), 2, 19).V;
  auto rep2 = pencil_limit(v_c2, random_form_space(k, 6, 3, rng), 23);
  CHECK(rep2.h_generic == HilbertTail(6, {4, 2, 0}));
  CHECK(rep2.semicontinuous);

  // random pencils across random strata
  auto poset = build_poset(8, 3);
  for (int t = 0; t < 40; ++t) {
    const auto& s = poset.strata[rng.below(poset.strata.size())];
    auto v0 = sample_hilbert_burch(k, 8, 3, s.D, s.c, 3000 + static_cast<std::uint64_t>(t)).V;
    auto v1 = random_form_space(k, 8, 3, rng);
    CHECK(pencil_limit(v0, v1, 4000 + static_cast<std::uint64_t>(t)).semicontinuous);
  }
}

TEST_CASE("closure certification on the worked (6,3) cases") {
  GF k;
  auto v_41 = sample_hilbert_burch(k, 6, 3, Partition({4, 2}), 0, 31).V;  // tail (4,2,1,0)

  auto up = certify_closure_membership(v_41, HilbertTail(6, {4, 2, 0}), 1);
  CHECK(up.outcome == CertifyOutcome::success);

  auto self = certify_closure_membership(v_41, HilbertTail(6, {4, 2, 1, 0}), 1);
  CHECK(self.outcome == CertifyOutcome::success);
  for (int a : self.added_per_degree) CHECK(a == 0);

  // (4,2,0) cannot reach (4,3,2,1,0): dim R_1 V = 6 > 5 already in degree 7
  auto v_gen = sample_hilbert_burch(k, 6, 3, Partition({3, 3}), 0, 37).V;
  auto down = certify_closure_membership(v_gen, HilbertTail(6, {4, 3, 2, 1, 0}), 1);
  CHECK(down.outcome == CertifyOutcome::overflow);
  CHECK(down.overflow_degree == 7);
}

TEST_CASE("closure certification matches the termwise predicate on all (6,3) pairs") {
  GF k;
  auto poset = build_poset(6, 3);
  for (std::size_t a = 0; a < poset.strata.size(); ++a)
    for (std::size_t b = 0; b < poset.strata.size(); ++b) {
      const auto& special = poset.strata[a];
      const auto& target = poset.strata[b];
      bool predicted = termwise_leq(target.tail, special.tail);
      int mismatches = 0;
      for (std::uint64_t seed : {11ULL, 22ULL, 33ULL}) {
        auto v = sample_hilbert_burch(k, 6, 3, special.D, special.c,
                                      derive_seed(seed, {a, b})).V;
        auto cert = certify_closure_membership(v, target.tail, seed);
        if ((cert.outcome == CertifyOutcome::success) != predicted) ++mismatches;
      }
      CHECK(mismatches < 3);  // no systematic disagreement on any pair
    }
}

TEST_CASE("mu family dimensions") {
  auto rows6 = mu_family_dims(6);
  REQUIRE(rows6.size() == 4);
  CHECK(rows6[2].mu == 2);
  CHECK(rows6[2].dim_from_codim == 20);
  CHECK(rows6[2].dim_closed_form == 20);
  CHECK(rows6[3].mu == 3);
  CHECK(rows6[3].dim_from_codim == 21);
  CHECK(rows6[3].dim_closed_form == 21);

  auto rows5 = mu_family_dims(5);
  CHECK(rows5[0].mu == 0);
  CHECK(rows5[0].dim_from_codim == 14);
  CHECK(rows5[0].dim_closed_form == 14);

  for (int n = 1; n <= 20; ++n)
    for (const auto& row : mu_family_dims(n)) {
      CHECK(row.dim_from_codim == row.dim_closed_form);
      if (row.mu >= 1) {
        // agree with the partition formula whenever both parts are positive
        Partition D = Partition::from_unsorted({row.n - row.mu, row.mu});
        CHECK(3 * (row.n + 1) - ell_partition(D, 0, 3) == row.dim_from_codim);
      }
    }
}

TEST_CASE("one-dimensional spaces: a single form is its own gcd") {
  GF k;
  auto s = sample_hilbert_burch(k, 5, 1, Partition(), 5, 2);
  CHECK(s.V.dim() == 1);
  CHECK(gcd_form(s.V).second == 5);
  CHECK(hilbert_tail(s.V) == HilbertTail(5, {5}));
  auto mb = mu_basis(s.V);
  CHECK(mb.col_degrees == Partition());
  CHECK(signed_minors(mb).size() == 1);
}

TEST_CASE("colon_by_form recovers the quotient") {
  GF k;
  Rng rng(91);
  auto g = random_split_form(k, 2, rng);
  auto base = random_form_space(k, 5, 3, rng);
  std::vector<BinaryForm<GF>> rows;
  for (int r = 0; r < base.dim(); ++r) rows.push_back(mul(g, base.basis_form(r)));
  auto v = FormSpace<GF>::from_rows(k, 7, rows);
  CHECK(colon_by_form(v, g) == base);
}
