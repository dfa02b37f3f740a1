#include <set>

#include "doctest.h"
#include "levelrank/errors.hpp"
#include "levelrank/partition.hpp"
#include "oracles.hpp"

using namespace levelrank;

TEST_CASE("partitions normalize and validate") {
  CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
  CHECK(Partition({3, 1}).size() == 4);
  CHECK(Partition({3, 1}).length() == 2);
  CHECK(Partition({3, 1}).part(5) == 0);
  CHECK_THROWS_AS(Partition({1, 3}), PreconditionError);
  CHECK_THROWS_AS(Partition({2, -1}), PreconditionError);
  CHECK(Partition{}.empty());
}

TEST_CASE("partition text forms") {
  CHECK(Partition({3, 3, 1}).str() == "(3,3,1)");
  CHECK(Partition({3, 3, 1}).shorthand() == "(3^2,1)");
  CHECK(Partition{}.str() == "()");
  CHECK(parse_partition("3^2,1") == Partition({3, 3, 1}));
  CHECK(parse_partition("(2^2, 1^4)") == Partition({2, 2, 1, 1, 1, 1}));
  CHECK(parse_partition("()").empty());
  CHECK(parse_partition("").empty());
  CHECK_THROWS_AS(parse_partition("1,3"), ParseError);
  CHECK_THROWS_AS(parse_partition("3,x"), ParseError);
  CHECK_THROWS_AS(parse_partition("3^0"), ParseError);
  for (int n = 0; n <= 9; ++n) {
    for (const auto& p : enum_partitions(n)) {
      CHECK(parse_partition(p.str()) == p);
      CHECK(parse_partition(p.shorthand()) == p);
    }
  }
}

TEST_CASE("hook lengths") {
  CHECK(hook_lengths(Partition({2, 1})) == std::vector<int>{3, 1, 1});
  CHECK(hook_lengths(Partition({3, 1})) == std::vector<int>{4, 2, 1, 1});
  CHECK(hook_lengths(Partition{}).empty());
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : enum_partitions(n)) CHECK(static_cast<int>(hook_lengths(p).size()) == n);
  }
}

TEST_CASE("cores") {
  CHECK(is_core(Partition({2, 1}), 2));
  CHECK(is_core(Partition({5, 3, 1}), 3));
  CHECK_FALSE(is_core(Partition({8, 6, 1}), 3));
  CHECK(is_core(Partition{}, 1));
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : enum_partitions(n)) CHECK_FALSE(is_core(p, 1));
  }
  // The 2-cores are the staircases.
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : enum_partitions(n)) {
      bool staircase = true;
      for (int i = 1; i <= p.length(); ++i) staircase = staircase && p.part(i) == p.length() - i + 1;
      CHECK(is_core(p, 2) == staircase);
    }
  }
}

TEST_CASE("enumeration matches the pentagonal recurrence") {
  CHECK(enum_partitions(0) == std::vector<Partition>{Partition{}});
  CHECK(enum_partitions(4).size() == 5);
  CHECK(enum_partitions(8).size() == 22);
  CHECK(enum_partitions(4) == std::vector<Partition>{Partition({4}), Partition({3, 1}),
                                                      Partition({2, 2}), Partition({2, 1, 1}),
                                                      Partition({1, 1, 1, 1})});
  for (int n = 0; n <= 20; ++n) {
    const auto all = enum_partitions(n);
    CHECK(static_cast<std::int64_t>(all.size()) == oracle::partition_count(n));
    std::set<Partition> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(all[i].size() == n);
      if (i > 0) CHECK(all[i - 1] > all[i]);
    }
  }
  Limits small;
  small.max_n = 10;
  CHECK_THROWS_AS(enum_partitions(11, small), LimitError);
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : enum_partitions(n)) CHECK(conjugate(conjugate(p)) == p);
  }
}

TEST_CASE("multipartitions") {
  const Multipartition mp({Partition({1, 1}), Partition{}, Partition{}});
  CHECK(mp.level() == 3);
  CHECK(mp.size() == 2);
  CHECK(mp.str() == "((1,1), ∅, ∅)");
  CHECK(Multipartition::empty_of_level(4).is_empty());
  CHECK(enum_multipartitions(0, 3).size() == 1);
  CHECK(enum_multipartitions(1, 4).size() == 4);
  // Number of l-multipartitions of n, by convolution of p(k).
  for (int level = 1; level <= 4; ++level) {
    for (int n = 0; n <= 6; ++n) {
      std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
      ways[0] = 1;
      for (int c = 0; c < level; ++c) {
        std::vector<std::int64_t> next(ways.size(), 0);
        for (int a = 0; a <= n; ++a) {
          for (int b = 0; a + b <= n; ++b) {
            next[static_cast<std::size_t>(a + b)] += ways[static_cast<std::size_t>(a)] * oracle::partition_count(b);
          }
        }
        ways = next;
      }
      const auto all = enum_multipartitions(n, level);
      CHECK(static_cast<std::int64_t>(all.size()) == ways[static_cast<std::size_t>(n)]);
      std::set<Multipartition> seen(all.begin(), all.end());
      CHECK(seen.size() == all.size());
      for (const auto& mp2 : all) CHECK(mp2.size() == n);
    }
  }
  Limits small;
  small.max_multipartitions = 10;
  CHECK_THROWS_AS(enum_multipartitions(3, 3, small), LimitError);
}
