#include <stdexcept>

#include "doctest.h"
#include "hstrata/partition.hpp"

using namespace hstrata;

TEST_CASE("partition validation and basics") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  Partition p({4, 2, 1});
  CHECK(p.sum() == 7);
  CHECK(p.length() == 3);
  CHECK(p.part(0) == 4);
  CHECK(p.part(5) == 0);
  CHECK(Partition::from_unsorted({0, 2, 4, 1}) == p);
  CHECK(Partition().to_string() == "(0)");
  CHECK(p.to_string() == "(4,2,1)");
}

TEST_CASE("conjugate") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
  CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));

  // involution, and length = largest part
  for (const auto& p : enumerate_partitions(8, 8)) {
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.conjugate().length() == p.part(0));
  }
}

TEST_CASE("bruhat order") {
  CHECK(bruhat_leq(Partition({2, 2}), Partition({3, 1})));
  CHECK(bruhat_leq(Partition({3, 1}), Partition({4})));
  CHECK(bruhat_leq(Partition({3, 1}), Partition({3, 1})));
  CHECK_FALSE(bruhat_leq(Partition({4}), Partition({3, 1})));

  // the (9,4) incomparable pair
  Partition a({4, 1, 1}), b({3, 3});
  CHECK_FALSE(bruhat_leq(a, b));
  CHECK_FALSE(bruhat_leq(b, a));

  CHECK_THROWS_AS(bruhat_leq(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("bruhat reverses under conjugation") {
  auto ps = enumerate_partitions(7, 7);
  for (const auto& p : ps)
    for (const auto& q : ps)
      CHECK(bruhat_leq(p, q) == bruhat_leq(q.conjugate(), p.conjugate()));
}

TEST_CASE("enumerate_partitions") {
  auto p42 = enumerate_partitions(4, 2);
  REQUIRE(p42.size() == 3);
  CHECK(p42[0] == Partition({2, 2}));
  CHECK(p42[1] == Partition({3, 1}));
  CHECK(p42[2] == Partition({4}));

  CHECK(enumerate_partitions(0, 3) == std::vector<Partition>{Partition()});
  CHECK(enumerate_partitions(6, 3).size() == 7);

  // exact part counts: P(9,3) used by the relation-degree poset
  auto p93 = enumerate_partitions(9, 3, true);
  CHECK(p93.size() == 7);
  for (const auto& p : p93) CHECK(p.length() == 3);

  // lexicographically sorted, duplicate-free
  auto all = enumerate_partitions(10, 10);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
}

TEST_CASE("ell_partition") {
  CHECK(ell_partition(Partition({3, 1}), 0, 3) == 1);
  CHECK(ell_partition(Partition({5, 1}), 0, 3) == 3);
  CHECK(ell_partition(Partition({3, 3}), 0, 3) == 0);
  CHECK(ell_partition(Partition({2, 2}), 2, 3) == 4);
  CHECK(ell_partition(Partition({7}), 0, 5) == 0);  // single part: no pairs
  CHECK(ell_partition(Partition(), 4, 3) == 8);
}
