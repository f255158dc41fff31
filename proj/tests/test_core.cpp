#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "jmexpand/errors.hpp"
#include "jmexpand/partition.hpp"
#include "jmexpand/permutation.hpp"

using namespace jmexpand;

namespace {

// independent partition-counting oracle: the pentagonal-number recurrence
long partition_count(int n) {
  static std::vector<long> table{1};
  while (static_cast<int>(table.size()) <= n) {
    int m = static_cast<int>(table.size());
    long total = 0;
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= m) total += sign * table[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * table[static_cast<std::size_t>(m - g2)];
    }
    table.push_back(total);
  }
  return table[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("part removal") {
  CHECK(Partition({3, 2, 1}).remove_part(2) == Partition({3, 1}));
  CHECK(Partition({2, 2}).remove_part(2) == Partition({2}));
  CHECK_THROWS_AS(Partition({1}).remove_part(2), NoSuchPartError);
}

TEST_CASE("part insertion") {
  CHECK(Partition({3, 1}).add_part(2) == Partition({3, 2, 1}));
  CHECK(Partition().add_part(5) == Partition({5}));
  CHECK(Partition({2, 2}).add_part(2) == Partition({2, 2, 2}));
  CHECK_THROWS_AS(Partition({2}).add_part(0), InvalidInputError);
}

TEST_CASE("stripping the parts equal to one") {
  CHECK(Partition({3, 1, 1}).strip_ones() ==
        std::pair<Partition, int>{Partition({3}), 2});
  CHECK(Partition({1, 1, 1}).strip_ones() ==
        std::pair<Partition, int>{Partition(), 3});
  CHECK(Partition({4, 2}).strip_ones() ==
        std::pair<Partition, int>{Partition({4, 2}), 0});
}

TEST_CASE("add then remove is the identity") {
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& p : partitions_of(n)) {
      for (int v = 1; v <= 5; ++v) {
        CHECK(p.add_part(v).remove_part(v) == p);
      }
      auto [stripped, ones] = p.strip_ones();
      CHECK(stripped.append_ones(ones) == p);
    }
  }
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(3) == std::vector<Partition>{Partition({3}),
                                                   Partition({2, 1}),
                                                   Partition({1, 1, 1})});
  CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
  CHECK(partitions_of(5).size() == 7);

  long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n <= 9; ++n) {
    CHECK(partition_count(n) == expected[n]);
    CHECK(static_cast<long>(partitions_of(n).size()) == partition_count(n));
    for (const Partition& p : partitions_of(n)) {
      CHECK(p.sum() == n);
      for (int i = 0; i + 1 < p.length(); ++i) {
        CHECK(p.part(i) >= p.part(i + 1));
      }
      if (!p.empty()) CHECK(p.smallest() >= 1);
    }
  }
}

TEST_CASE("text syntax") {
  CHECK(parse_partition("3,1,1") == Partition({3, 1, 1}));
  CHECK(parse_partition("-") == Partition());
  CHECK(parse_partition("1,3") == Partition({3, 1}));
  CHECK(partition_to_string(Partition({3, 1, 1})) == "3,1,1");
  CHECK(partition_to_string(Partition()) == "-");
  CHECK_THROWS_AS(parse_partition("0,1"), InvalidInputError);
  CHECK_THROWS_AS(parse_partition("2,x"), InvalidInputError);
  for (int n = 0; n <= 7; ++n) {
    for (const Partition& p : partitions_of(n)) {
      CHECK(parse_partition(partition_to_string(p)) == p);
    }
  }
}

TEST_CASE("centralizer orders") {
  CHECK(symmetrizer_order(Partition({3})) == 3);
  CHECK(symmetrizer_order(Partition({2, 2})) == 8);
  CHECK(symmetrizer_order(Partition({2, 1, 1})) == 4);
  CHECK(symmetrizer_order(Partition({1, 1, 1, 1})) == 24);
  CHECK(symmetrizer_order(Partition()) == 1);
}

TEST_CASE("weak compositions") {
  CHECK_THROWS_AS(WeakComposition({1, -1}), InvalidInputError);
  CHECK(decrement_parts(Partition({3, 1})).entries ==
        std::vector<int>{2, 0});
  CHECK(WeakComposition({2, 0, 1}).sum() == 3);
}

TEST_CASE("cycle types") {
  CHECK(Permutation::identity(4).cycle_type() == Partition({1, 1, 1, 1}));
  CHECK(Permutation::transposition(3, 0, 1).cycle_type() ==
        Partition({2, 1}));
  // a 3-cycle and a disjoint transposition on five points
  Permutation sigma({1, 2, 0, 4, 3});
  CHECK(sigma.cycle_type() == Partition({3, 2}));
  CHECK(sigma.cycle_count() == 2);
  CHECK(sigma.fixed_points() == 0);
}

TEST_CASE("product convention: the right factor acts first") {
  // multiplying by (j n+1) on the left splices n+1 into the cycle of sigma
  // right before j
  Permutation sigma({1, 2, 0, 3});  // the 3-cycle (0 1 2) with 3 fixed
  for (int j = 0; j < 4; ++j) {
    Permutation extended({1, 2, 0, 3, 4});
    Permutation product = Permutation::transposition(5, j, 4) * extended;
    CHECK(product.apply(4) == j);
    CHECK(product.apply(extended.inverse().apply(j)) == 4);
    for (int x = 0; x < 4; ++x) {
      if (extended.apply(x) != j) CHECK(product.apply(x) == extended.apply(x));
    }
  }
}

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidInputError);
  CHECK_THROWS_AS(Permutation::transposition(3, 0, 3), IndexOutOfRangeError);
  Permutation sigma({2, 0, 1});
  CHECK(sigma * sigma.inverse() == Permutation::identity(3));
  CHECK(sigma.inverse() * sigma == Permutation::identity(3));
  int count = 0;
  for_each_permutation(4, [&](const Permutation&) { ++count; });
  CHECK(count == 24);
}
