#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symwalk/partition.hpp"

using namespace symwalk;

namespace {

// Random partition of n: random composition, sorted.
Partition random_partition(std::mt19937_64& gen, int n) {
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    const int take = std::uniform_int_distribution<int>(1, left)(gen);
    parts.push_back(take);
    left -= take;
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(parts);
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("construction and text round trip") {
    const auto lambda = Partition::parse("14,4,3,2^2,1");
    CHECK(lambda.parts() == std::vector<int>{14, 4, 3, 2, 2, 1});
    CHECK(lambda.size() == 26);
    CHECK(lambda.length() == 6);
    CHECK(lambda.to_string() == "14+4+3+2^2+1");
    CHECK(Partition::parse("2^5").parts() == std::vector<int>(5, 2));
    CHECK(Partition().to_string() == "empty");
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
  }

  TEST_CASE("anatomy of small diagrams") {
    const Partition small({3, 2});
    const auto& a = small.anatomy();
    CHECK(a.durfee == 2);
    CHECK(a.arms == std::vector<int>{2, 0});
    CHECK(a.legs == std::vector<int>{1, 0});
    CHECK(a.external_hook == 4);
    CHECK(a.center == 1);

    const Partition single({9});
    const auto& row = single.anatomy();
    CHECK(row.durfee == 1);
    CHECK(row.arms == std::vector<int>{8});
    CHECK(row.legs == std::vector<int>{0});
    CHECK(row.external_hook == 9);
    CHECK(row.center == 0);
  }

  TEST_CASE("anatomy of [14,4,3,2,2,1]") {
    const Partition running({14, 4, 3, 2, 2, 1});
    const auto& a = running.anatomy();
    CHECK(a.durfee == 3);
    CHECK(a.arms == std::vector<int>{13, 2, 0});
    CHECK(a.legs == std::vector<int>{5, 3, 0});
    CHECK(a.columns == std::vector<int>{6, 5, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  }

  TEST_CASE("hook lengths") {
    const Partition lambda({7, 5, 4, 1});
    CHECK(hook_length(lambda, {2, 2}) == 5);
    CHECK(hook_length(Partition({6}), {1, 1}) == 6);
    CHECK(hook_length(Partition({3, 2}), {1, 1}) == 4);
    CHECK_THROWS_AS(hook_length(lambda, {4, 2}), std::out_of_range);
    CHECK_THROWS_AS(hook_length(lambda, {0, 1}), std::out_of_range);
  }

  TEST_CASE("hook products") {
    const Partition lambda({7, 5, 4, 1});
    const std::vector<Box> set{{1, 1}, {1, 3}, {1, 6}, {2, 1}, {2, 2}, {3, 3}};
    CHECK(hook_product(lambda, set) == 9800);
    CHECK(hook_product(lambda, std::span<const Box>{}) == 1);
    CHECK(hook_product(Partition({3, 2})) == 24);
    const std::vector<Box> outside{{1, 8}};
    CHECK_THROWS_AS(hook_product(lambda, outside), std::out_of_range);
  }

  TEST_CASE("enumeration order and counts") {
    const auto four = enumerate_partitions(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0].parts() == std::vector<int>{4});
    CHECK(four[1].parts() == std::vector<int>{3, 1});
    CHECK(four[2].parts() == std::vector<int>{2, 2});
    CHECK(four[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(four[4].parts() == std::vector<int>{1, 1, 1, 1});

    const auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
    CHECK_THROWS(enumerate_partitions(-1));

    const auto counts = oracle::partition_counts(60);
    for (int n = 0; n <= 60; ++n) {
      long long seen = 0;
      for_each_partition(n, [&](const std::vector<int>&) { ++seen; });
      CHECK_MESSAGE(seen == counts[static_cast<std::size_t>(n)], "n = " << n);
    }
    for (int n = 1; n <= 20; ++n) {
      const auto all = enumerate_partitions(n);
      CHECK(static_cast<long long>(all.size()) == counts[static_cast<std::size_t>(n)]);
      for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].size() == n);
        if (i > 0) CHECK(all[i - 1] > all[i]);
      }
    }
  }

  TEST_CASE("conjugation and transposed hooks, n <= 20") {
    for (int n = 1; n <= 20; ++n) {
      for (const auto& lambda : enumerate_partitions(n)) {
        const auto transpose = conjugate(lambda);
        REQUIRE(transpose.parts() == oracle::column_counts(lambda.parts()));
        CHECK(conjugate(transpose) == lambda);
        const auto boxes = lambda.boxes();
        CHECK(static_cast<int>(boxes.size()) == n);
        for (const auto& u : boxes) CHECK(hook_length(lambda, u) == hook_length(transpose, {u.col, u.row}));
        CHECK(hook_product(lambda) == hook_product(transpose));
      }
    }
  }

  TEST_CASE("durfee square, external hook and center") {
    for (int n = 1; n <= 18; ++n) {
      for (const auto& lambda : enumerate_partitions(n)) {
        const auto& a = lambda.anatomy();
        CHECK(a.durfee * a.durfee <= n);
        CHECK(lambda.row(a.durfee) >= a.durfee);
        CHECK(lambda.row(a.durfee + 1) < a.durfee + 1);
        CHECK(a.external_hook == lambda.row(1) + lambda.column(1) - 1);
        CHECK(a.center == n - a.external_hook);
        const auto center = lambda.center();
        CHECK(center.size() == a.center);
        for (int i = 1; i <= center.length(); ++i) CHECK(center.row(i) == lambda.row(i + 1) - 1);
        CHECK(lambda.external_hook().size() == a.external_hook);
        for (std::size_t i = 0; i < a.arms.size(); ++i)
          CHECK(a.diagonal_hooks[i] == a.arms[i] + a.legs[i] + 1);
      }
    }
  }

  TEST_CASE("subdiagrams match a containment filter") {
    std::mt19937_64 gen(20261015);
    for (int trial = 0; trial < 40; ++trial) {
      const auto outer = random_partition(gen, std::uniform_int_distribution<int>(1, 10)(gen));
      std::size_t expected = 0;
      for (int m = 1; m <= outer.size(); ++m)
        for (const auto& mu : enumerate_partitions(m)) expected += outer.contains(mu);
      const auto subs = enumerate_subdiagrams(outer);
      CHECK(subs.size() == expected);
      for (const auto& mu : subs) CHECK(outer.contains(mu));
    }
    CHECK(enumerate_subdiagrams(Partition({2, 1})).size() == 4);
  }
}
