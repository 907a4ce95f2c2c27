#include <stdexcept>

#include <algorithm>
#include <set>

#include "doctest.h"
#include "hstrata/strata.hpp"

using namespace hstrata;

namespace {

// Brute-force oracle: every strictly-decreasing-to-stable candidate tail for
// (j, d), filtered by the direct admissibility predicate.
void collect_candidates(int j, int d, std::vector<int>& acc,
                        std::vector<HilbertTail>& out) {
  out.emplace_back(j, acc);
  if (acc.back() == 0) return;
  for (int next = acc.back() - 1; next >= 0; --next) {
    acc.push_back(next);
    collect_candidates(j, d, acc, out);
    acc.pop_back();
  }
}

std::vector<HilbertTail> admissible_by_filter(int j, int d) {
  std::vector<int> acc{j + 1 - d};
  std::vector<HilbertTail> all;
  collect_candidates(j, d, acc, all);
  std::vector<HilbertTail> out;
  for (const auto& t : all)
    if (is_admissible_tail(t, j, d)) out.push_back(t);
  return out;
}

std::multiset<std::string> tail_strings(const std::vector<HilbertTail>& v) {
  std::multiset<std::string> out;
  for (const auto& t : v) out.insert(t.to_string());
  return out;
}

}  // namespace

TEST_CASE("admissible tail counts") {
  CHECK(admissible_tails(6, 3).size() == 9);
  CHECK(admissible_tails(8, 3).size() == 16);
  CHECK(admissible_tails(9, 4).size() == 23);
  CHECK(admissible_tails(7, 8).size() == 1);  // d = j+1: only the zero tail
  CHECK(admissible_tails(7, 8).front() == HilbertTail(7, {0}));
}

TEST_CASE("lambda construction coincides with the direct filter") {
  for (int j = 1; j <= 9; ++j)
    for (int d = 1; d <= j + 1; ++d)
      CHECK(tail_strings(admissible_tails(j, d)) == tail_strings(admissible_by_filter(j, d)));
}

TEST_CASE("stratum count matches the partition count formula") {
  for (int j = 1; j <= 12; ++j)
    for (int d = 1; d <= j + 1; ++d) {
      std::size_t expect = 0;
      int max_parts = std::min(d, j + 2 - d) - 1;
      for (int c = 0; c <= j + 1 - d; ++c)
        for (const auto& lam : enumerate_partitions(j + 1 - d - c, max_parts))
          if (!lam.empty() || c == j + 1 - d) ++expect;
      CHECK(admissible_tails(j, d).size() == expect);
    }
}

TEST_CASE("dim_GH on the stock examples") {
  CHECK(dim_GH(HilbertTail(8, {6, 4, 3, 2, 1, 0})) == 15);
  CHECK(dim_GH(HilbertTail(6, {4, 2, 0})) == 12);
  CHECK(dim_GH(HilbertTail(6, {4})) == 4);
}

TEST_CASE("cod_in_G on the stock examples") {
  CHECK(cod_in_G(Partition({5, 1}), 0, 3) == 3);
  CHECK(cod_in_G(Partition({3, 3}), 0, 3) == 0);
  CHECK(cod_in_G(Partition({2, 2}), 2, 3) == 4);
  CHECK_THROWS_AS(cod_in_G(Partition({2, 2}), 0, 4), std::invalid_argument);
}

TEST_CASE("cod_tau") {
  CHECK(cod_tau(6, 3, 2) == 3);
  CHECK(cod_tau(9, 4, 4) == 0);
  CHECK(cod_tau(9, 4, 3) == 4);
  CHECK_THROWS_AS(cod_tau(6, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(cod_tau(6, 3, 0), std::invalid_argument);
}

TEST_CASE("the (6,3) stratum table") {
  auto poset = build_poset(6, 3);
  REQUIRE(poset.strata.size() == 9);

  const std::vector<Partition> lambdas{Partition({2, 2}), Partition({3, 1}), Partition({4}),
                                       Partition({2, 1}), Partition({3}),    Partition({1, 1}),
                                       Partition({2}),    Partition({1}),    Partition()};
  const std::vector<int> cs{0, 0, 0, 1, 1, 2, 2, 3, 4};
  const std::vector<int> taus{3, 3, 2, 3, 2, 3, 2, 2, 1};
  const std::vector<int> dims{12, 11, 9, 10, 8, 8, 7, 6, 4};
  const std::vector<int> cods{0, 1, 3, 2, 4, 4, 5, 6, 8};
  const std::vector<std::string> tails{"(4,2,0)", "(4,2,1,0)", "(4,3,2,1,0)",
                                       "(4,2,1)", "(4,3,2,1)", "(4,2)",
                                       "(4,3,2)", "(4,3)",     "(4)"};
  const std::vector<std::string> conjs{"(2,2)", "(2,1,1)", "(1,1,1,1)", "(2,1)", "(1,1,1)",
                                       "(2)",   "(1,1)",   "(1)",       "(0)"};
  for (std::size_t i = 0; i < 9; ++i) {
    const auto& s = poset.strata[i];
    CHECK(s.lambda == lambdas[i]);
    CHECK(s.c == cs[i]);
    CHECK(s.tau == taus[i]);
    CHECK(s.dim_stratum == dims[i]);
    CHECK(s.cod_in_G == cods[i]);
    CHECK(s.tail.to_string() == tails[i]);
    CHECK(s.lambda.conjugate().to_string() == conjs[i]);
  }
}

TEST_CASE("the (8,3) stratum table and the closure of (6,4,3,2,1,0)") {
  auto poset = build_poset(8, 3);
  REQUIRE(poset.strata.size() == 16);
  const std::vector<int> dims{18, 17, 15, 13, 16, 14, 12, 14, 13, 11, 12, 10, 10, 9, 8, 6};
  for (std::size_t i = 0; i < 16; ++i) CHECK(poset.strata[i].dim_stratum == dims[i]);

  int idx = poset.index_of(HilbertTail(8, {6, 4, 3, 2, 1, 0}));
  REQUIRE(idx >= 0);
  auto closure = poset.closure_set(idx);
  CHECK(closure.size() == 12);  // itself plus eleven strata above it
}

TEST_CASE("cross-formula identities for all strata up to j = 12") {
  for (int j = 1; j <= 12; ++j)
    for (int d = 1; d <= j + 1; ++d) {
      auto poset = build_poset(j, d);
      for (const auto& s : poset.strata) {
        CHECK(s.dim_stratum + s.cod_in_G == d * (j + 1 - d));
        CHECK(s.cod_in_G == cod_tau(j - s.c, d, s.tau) + s.cod_in_tau);
        CHECK(s.D == relation_degrees(s.lambda, d));
        CHECK(s.D.sum() == j - s.c);
      }
    }
}

TEST_CASE("order equivalences on the c = 0 strata") {
  for (auto [j, d] : {std::pair{6, 3}, std::pair{8, 3}, std::pair{9, 4}, std::pair{10, 5}}) {
    auto lambdas = enumerate_partitions(j + 1 - d, d - 1);
    for (const auto& a : lambdas)
      for (const auto& b : lambdas) {
        bool tails = termwise_leq(tail_from_lambda(a, 0, j, d), tail_from_lambda(b, 0, j, d));
        CHECK(tails == bruhat_leq(a, b));
        CHECK(tails == bruhat_leq(b.conjugate(), a.conjugate()));
        CHECK(tails == bruhat_leq(relation_degrees(a, d), relation_degrees(b, d)));
      }
  }
}

TEST_CASE("poset structure sanity") {
  auto poset = build_poset(6, 3);
  const int n = static_cast<int>(poset.strata.size());

  // top element: the constant tail at c = j+1-d
  int top = poset.index_of(HilbertTail(6, {4}));
  REQUIRE(top >= 0);
  for (int i = 0; i < n; ++i) CHECK(poset.leq[i][top]);

  // bottom element: the generic stratum
  int bot = poset.index_of(HilbertTail(6, {4, 2, 0}));
  for (int i = 0; i < n; ++i) CHECK(poset.leq[bot][i]);

  // hasse edges regenerate the order as their transitive closure
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) reach[i][i] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [a, b] : poset.hasse)
      for (int i = 0; i < n; ++i)
        if (reach[i][a] && !reach[i][b]) {
          reach[i][b] = true;
          changed = true;
        }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) CHECK(reach[a][b] == static_cast<bool>(poset.leq[a][b]));

  // closure sets are up-sets
  for (int i = 0; i < n; ++i)
    for (int u : poset.closure_set(i))
      for (int w = 0; w < n; ++w)
        if (poset.leq[u][w]) {
          auto cs = poset.closure_set(i);
          CHECK(std::find(cs.begin(), cs.end(), w) != cs.end());
        }

  // single-stratum case
  auto tiny = build_poset(5, 6);
  CHECK(tiny.strata.size() == 1);
  CHECK(tiny.hasse.empty());
}

TEST_CASE("maximal chains between (4,2,1,0) and (4,3,2)") {
  auto poset = build_poset(6, 3);
  int lo = poset.index_of(HilbertTail(6, {4, 2, 1, 0}));
  int hi = poset.index_of(HilbertTail(6, {4, 3, 2}));
  REQUIRE(lo >= 0);
  REQUIRE(hi >= 0);
  auto chains = poset.maximal_chains(lo, hi);

  auto chain_tails = [&](const std::vector<int>& chain) {
    std::vector<std::string> out;
    for (int i : chain) out.push_back(poset.strata[static_cast<std::size_t>(i)].tail.to_string());
    return out;
  };
  std::vector<std::vector<std::string>> got;
  for (const auto& ch : chains) got.push_back(chain_tails(ch));

  // The two chains via lambda-conjugates (1,1) <= (1,1,1) <= (1,1,1,1) <= (2,1,1)
  // and (1,1) <= (2) <= (2,1) <= (2,1,1) ...
  std::vector<std::string> via_c0{"(4,2,1,0)", "(4,3,2,1,0)", "(4,3,2,1)", "(4,3,2)"};
  std::vector<std::string> via_c2{"(4,2,1,0)", "(4,2,1)", "(4,2)", "(4,3,2)"};
  CHECK(std::find(got.begin(), got.end(), via_c0) != got.end());
  CHECK(std::find(got.begin(), got.end(), via_c2) != got.end());

  // ... plus the cross chain through (4,2,1) and (4,3,2,1), which the
  // termwise order also admits: three saturated chains in total.
  std::vector<std::string> cross{"(4,2,1,0)", "(4,2,1)", "(4,3,2,1)", "(4,3,2)"};
  CHECK(std::find(got.begin(), got.end(), cross) != got.end());
  CHECK(chains.size() == 3);
}

TEST_CASE("nose strata of (9,4) match the frozen table") {
  auto rows = nose_strata(9, 4);
  REQUIRE(rows.size() == 5);

  const std::vector<Partition> as{Partition({1, 1, 1, 1}), Partition({2, 1, 1}),
                                  Partition({2, 2}), Partition({3, 1}), Partition({4})};
  const std::vector<int> taus{4, 3, 2, 2, 1};
  const std::vector<int> cs{0, 0, 0, 0, 6};
  const std::vector<int> dims{24, 20, 14, 13, 6};
  const std::vector<std::vector<int>> anc{{0, 0, 0, 4}, {0, 0, 1, 4}, {0, 0, 2, 4},
                                          {0, 1, 2, 4}, {1, 2, 3, 4}};
  const std::vector<std::vector<int>> nvals{{7, 8, 9, 6}, {7, 8, 8, 6}, {7, 8, 7, 6},
                                            {7, 7, 7, 6}, {6, 6, 6, 6}};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(rows[i].A == as[i]);
    CHECK(rows[i].tau == taus[i]);
    CHECK(rows[i].c == cs[i]);
    CHECK(rows[i].dim_stratum == dims[i]);
    CHECK(std::vector<int>(rows[i].ancestor_dims.end() - 4, rows[i].ancestor_dims.end()) == anc[i]);
    CHECK(std::vector<int>(rows[i].N.end() - 4, rows[i].N.end()) == nvals[i]);
  }
}

TEST_CASE("nose closure order is reverse Bruhat on A") {
  for (auto [j, d] : {std::pair{9, 4}, std::pair{8, 3}, std::pair{11, 5}}) {
    auto rows = nose_strata(j, d);
    for (const auto& a : rows)
      for (const auto& b : rows) {
        bool n_leq = true;
        for (int i = 0; i <= j && n_leq; ++i)
          if (a.N[static_cast<std::size_t>(i)] > b.N[static_cast<std::size_t>(i)]) n_leq = false;
        CHECK(n_leq == bruhat_leq(b.A, a.A));
      }
  }
}

TEST_CASE("nose dims agree with a tau-stratum dimension count") {
  // A = (1^d): cod 0 inside Grass_d
  auto rows = nose_strata(9, 4);
  CHECK(rows.front().cod_in_tau == 0);
  CHECK(rows.front().dim_stratum == 4 * 6 - cod_tau(9, 4, 4));
  // A = (2,1,1): dimension 8 + 12 = 20 by the fibration over P(R_8)
  CHECK(rows[1].dim_stratum == 20);
}
