#include <stdexcept>

#include "doctest.h"
#include "hstrata/hilbert.hpp"

using namespace hstrata;

TEST_CASE("HilbertTail accessors and validation") {
  HilbertTail t(6, {4, 2, 0});
  CHECK(t.c() == 0);
  CHECK(t.d() == 3);
  CHECK(t.value_at(6) == 4);
  CHECK(t.value_at(8) == 0);
  CHECK(t.value_at(20) == 0);
  CHECK(t.e(7) == 2);
  CHECK(t.tau() == 3);
  CHECK(t.to_string() == "(4,2,0)");
  CHECK_THROWS_AS(HilbertTail(6, {4, 4, 2}), std::invalid_argument);
  CHECK_THROWS_AS(HilbertTail(6, {}), std::invalid_argument);
}

TEST_CASE("termwise order pads with the stable value") {
  HilbertTail a(6, {4, 2, 0}), b(6, {4, 3, 2, 1, 0}), c(6, {4, 2, 1});
  CHECK(termwise_leq(a, b));
  CHECK_FALSE(termwise_leq(b, a));
  CHECK(termwise_leq(a, c));   // (4,2,0,0,...) <= (4,2,1,1,...)
  CHECK_FALSE(termwise_leq(c, b));  // at high degrees 1 > 0
  CHECK_FALSE(termwise_leq(b, c));  // early on 3 > 2
  CHECK(termwise_leq(a, a));
}

TEST_CASE("lambda_of recovers (lambda, c) from tails") {
  auto [l1, c1] = lambda_of(HilbertTail(6, {4, 2, 1, 0}));
  CHECK(l1 == Partition({3, 1}));
  CHECK(c1 == 0);

  auto [l2, c2] = lambda_of(HilbertTail(8, {6, 4, 3, 2, 1}));
  CHECK(l2 == Partition({4, 1}));
  CHECK(c2 == 1);

  // constant tail: the principal-ancestor case, tau = 1
  auto [l3, c3] = lambda_of(HilbertTail(6, {4}));
  CHECK(l3 == Partition());
  CHECK(c3 == 4);
}

TEST_CASE("relation_degrees pads with ones") {
  CHECK(relation_degrees(Partition({2, 2}), 3) == Partition({3, 3}));
  CHECK(relation_degrees(Partition({4}), 3) == Partition({5, 1}));
  CHECK(relation_degrees(Partition(), 3) == Partition({1, 1}));
  CHECK(relation_degrees(Partition({3, 1}), 5) == Partition({4, 2, 1, 1}));
  CHECK_THROWS_AS(relation_degrees(Partition({1, 1, 1}), 3), std::invalid_argument);
}

TEST_CASE("tail_from_lambda matches the frozen table rows") {
  CHECK(tail_from_lambda(Partition({5, 1}), 0, 8, 3) == HilbertTail(8, {6, 4, 3, 2, 1, 0}));
  CHECK(tail_from_lambda(Partition(), 4, 6, 3) == HilbertTail(6, {4}));
  CHECK(tail_from_lambda(Partition({2, 1}), 1, 6, 3) == HilbertTail(6, {4, 2, 1}));
  CHECK_THROWS_AS(tail_from_lambda(Partition({3}), 0, 6, 3), std::invalid_argument);
}

TEST_CASE("lambda_of and tail_from_lambda are mutually inverse") {
  for (int j : {5, 6, 8, 9, 11})
    for (int d = 1; d <= j + 1; ++d) {
      int max_parts = std::min(d, j + 2 - d) - 1;
      for (int c = 0; c <= j + 1 - d; ++c)
        for (const auto& lam : enumerate_partitions(j + 1 - d - c, max_parts)) {
          if (lam.empty() && c != j + 1 - d) continue;
          auto t = tail_from_lambda(lam, c, j, d);
          auto [back, cb] = lambda_of(t);
          CHECK(back == lam);
          CHECK(cb == c);
          // the difference sequence is the conjugate of lambda
          std::vector<int> diffs;
          for (int i = j + 1; i < j + t.length(); ++i) diffs.push_back(t.e(i));
          CHECK(Partition::from_unsorted(diffs) == lam.conjugate());
        }
    }
}
