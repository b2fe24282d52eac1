#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "symwalk/degrees.hpp"
#include "symwalk/slicing.hpp"

using namespace symwalk;

namespace {

// [H(arm_1 alone)/H(lambda, arm_1)] [H(leg_1 alone)/H(lambda, leg_1)]
Rational arm_leg_factor(const Partition& lambda) {
  const auto& a = lambda.anatomy();
  BigCount arm_in_lambda = 1, leg_in_lambda = 1;
  for (int j = 2; j <= lambda.row(1); ++j) arm_in_lambda *= hook_length(lambda, {1, j});
  for (int i = 2; i <= lambda.column(1); ++i) leg_in_lambda *= hook_length(lambda, {i, 1});
  Rational r(factorial(static_cast<unsigned long>(a.arms[0])) * factorial(static_cast<unsigned long>(a.legs[0])),
             arm_in_lambda * leg_in_lambda);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_SUITE("degrees") {
  TEST_CASE("dimensions") {
    CHECK(dimension(Partition({3, 2})) == 5);
    CHECK(dimension(Partition({7})) == 1);
    CHECK(dimension(Partition({2, 2})) == 2);
    CHECK(dimension(Partition({8, 2})) == 35);
    for (int n = 1; n <= 14; ++n)
      for (const auto& lambda : enumerate_partitions(n))
        CHECK_MESSAGE(dimension(lambda) == oracle::standard_tableaux(lambda.parts()), lambda.to_string());
  }

  TEST_CASE("sum of squared dimensions and the square-root ceiling") {
    for (int n = 1; n <= 20; ++n) {
      BigCount total = 0;
      const BigCount order = factorial(static_cast<unsigned long>(n));
      for (const auto& lambda : enumerate_partitions(n)) {
        const auto d = dimension(lambda);
        total += d * d;
        CHECK(d * d <= order);
      }
      CHECK(total == order);
    }
  }

  TEST_CASE("log dimensions") {
    CHECK(log_dimension(Partition({3, 2})) == doctest::Approx(std::log(5.0)));
    for (const auto& parts : {std::vector<int>{30, 12, 5, 1}, {20, 20, 10}, std::vector<int>(45, 1), {41, 1}, {7, 7, 7, 7, 7, 7, 7}}) {
      const Partition lambda(parts);
      const double exact = log_abs(dimension(lambda));
      CHECK(log_dimension(lambda) == doctest::Approx(exact).epsilon(1e-9).scale(1.0));
    }
  }

  TEST_CASE("virtual degrees") {
    CHECK(virtual_degree(Partition({9})) == 1);
    CHECK(virtual_degree(Partition({8, 2})) == 72);
    CHECK(virtual_degree(Partition({2, 2})) == 6);
    for (int n = 5; n <= 20; ++n) CHECK(virtual_degree(Partition({n - 2, 2})) == (n - 1) * (n - 2));
  }

  TEST_CASE("augmented dimensions") {
    CHECK(augmented_dimension(Partition({5})) == 1);
    // [2,2]: s = (3, 1), arms and legs (1, 0): 4! / 3
    CHECK(augmented_dimension(Partition({2, 2})) == 8);
    CHECK(binomial(4, 3) * dimension(Partition({2, 1})) * dimension(Partition({1})) == 8);
    for (int n = 1; n <= 12; ++n)
      for (int leg = 0; leg < n; ++leg) {
        std::vector<int> parts{n - leg};
        parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
        const Partition hook(parts);
        CHECK(augmented_dimension(hook) == dimension(hook));
        CHECK(dimension(hook) == binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(n - leg - 1)));
      }
  }

  TEST_CASE("sliced dimensions") {
    const Partition small({3, 2});
    CHECK(p_dimension(small, SliceSpec::whole(small)) == 5);
    CHECK(p_dimension(small, SliceSpec::first_row()) == 10);
    CHECK(p_dimension(Partition({8, 2}), SliceSpec::ab_delta()) == 720);
  }

  TEST_CASE("identity chain, n <= 16") {
    for (int n = 1; n <= 16; ++n)
      for (const auto& lambda : enumerate_partitions(n)) {
        const auto& a = lambda.anatomy();
        const BigCount d_virtual = virtual_degree(lambda);
        const BigCount d_plus = augmented_dimension(lambda);
        CHECK(Rational(d_virtual) == p_dimension(lambda, SliceSpec::ab_delta()) / n);
        BigCount s_product = 1;
        for (int s : a.diagonal_hooks) s_product *= s;
        CHECK(Rational(d_virtual) * n == Rational(s_product * d_plus));
        const Partition hook = lambda.external_hook();
        const Partition center = lambda.center();
        CHECK(d_plus == binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(a.external_hook)) *
                            augmented_dimension(hook) * augmented_dimension(center));
        CHECK(augmented_dimension(hook) == dimension(hook));
        CHECK(dimension(hook) == binomial(static_cast<unsigned long>(a.external_hook - 1), static_cast<unsigned long>(a.arms[0])));
      }
  }

  TEST_CASE("barnes G") {
    CHECK(barnes_g(1) == 1);
    CHECK(barnes_g(2) == 1);
    CHECK(barnes_g(3) == 1);
    CHECK(barnes_g(4) == 2);
    CHECK(barnes_g(5) == 12);
    for (int p = 1; p <= 12; ++p) {
      const BigCount g = barnes_g(p + 1);
      CHECK(hook_product(Partition(std::vector<int>(static_cast<std::size_t>(p), p))) * g * g == barnes_g(2 * p + 1));
    }
  }

  TEST_CASE("center ratio") {
    for (int leg = 0; leg < 6; ++leg) {
      std::vector<int> parts{4};
      parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
      const auto report = center_bound_report(Partition(parts));
      CHECK(report.ratio == 1);
      CHECK(report.lower_ok);
      CHECK(report.upper_ok);
    }
    CHECK(center_bound_report(Partition({3, 2})).ratio == Rational(1, 3));
    CHECK(center_bound_report(Partition({2, 2})).ratio == Rational(1, 4));
    const auto empty = center_bound_report(Partition());
    CHECK(empty.ratio == 1);
  }

  TEST_CASE("center ratio factors through the first arm and leg, n <= 16") {
    for (int n = 1; n <= 16; ++n)
      for (const auto& lambda : enumerate_partitions(n)) {
        const auto report = center_bound_report(lambda);
        CHECK(report.ratio == arm_leg_factor(lambda));
        CHECK(center_ratio_factored(lambda) == report.ratio);
        CHECK(report.upper_ok);
        CHECK(report.lower_ok);
        CHECK(report.ratio <= 1);
        CHECK(report.lower_log == doctest::Approx(-6.0 * std::sqrt(double(lambda.anatomy().center))));
      }
  }

  TEST_CASE("exponent gaps") {
    CHECK_FALSE(exponent_gap(1, 1, 5));
    const auto gap = exponent_gap(35, 72, 10);
    REQUIRE(gap);
    CHECK(*gap == doctest::Approx((std::log(72.0) - std::log(35.0)) * std::log(10.0) / std::log(35.0)));

    const auto report = degree_report(Partition({8, 2}));
    CHECK(report.dimension == 35);
    CHECK(report.virtual_degree == 72);
    CHECK(report.augmented_dimension == 80);
    REQUIRE(report.exponent_gap);
    CHECK(*report.exponent_gap == doctest::Approx(*gap));
    CHECK_FALSE(degree_report(Partition({1, 1, 1})).exponent_gap);
  }

  TEST_CASE("sharpness families") {
    CHECK(sharpness_member(SharpnessFamily::Square, 3) == Partition({3, 3, 3}));
    CHECK(sharpness_member(SharpnessFamily::AlmostFlat, 10) == Partition({8, 2}));
    const auto flat = sharpness_scan(SharpnessFamily::AlmostFlat, {10});
    REQUIRE(flat.size() == 1);
    CHECK(flat[0].n == 10);
    CHECK(flat[0].log_dimension == doctest::Approx(std::log(35.0)));
    CHECK(flat[0].log_virtual_degree == doctest::Approx(std::log(72.0)));
    const auto square = sharpness_scan(SharpnessFamily::Square, {2});
    CHECK(square[0].log_dimension == doctest::Approx(std::log(2.0)));
    CHECK(square[0].log_virtual_degree == doctest::Approx(std::log(6.0)));
  }

  TEST_CASE("largest exponent gap dominates every partition") {
    for (int n = 10; n <= 18; ++n) {
      const auto best = exponent_gap_maximum(n);
      CHECK(best.n == n);
      CHECK(dimension(best.argmax) >= 2);
      CHECK(std::isfinite(best.gap));
      CHECK(best.gap > 0);
      for (const auto& lambda : enumerate_partitions(n)) {
        const auto g = degree_report(lambda).exponent_gap;
        if (g) CHECK(*g <= best.gap + 1e-12);
      }
    }
  }
}
