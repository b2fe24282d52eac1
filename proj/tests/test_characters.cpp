#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "symwalk/characters.hpp"
#include "symwalk/degrees.hpp"

using namespace symwalk;

namespace {

bool is_hook(const Partition& lambda) { return lambda.length() <= 1 || lambda.row(2) <= 1; }

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("small values") {
    CHECK(character(Partition({2, 1}), CycleType::parse("3")) == -1);
    CHECK(character(Partition({2, 1}), CycleType::parse("2,1")) == 0);
    CHECK(character(Partition({2, 1}), CycleType::identity(3)) == 2);
    CHECK(character(Partition(), CycleType()) == 1);
    CHECK_THROWS_AS(character(Partition({2, 1}), CycleType::parse("2,2")), std::invalid_argument);

    const auto column = character_column(CycleType::parse("2,1"));
    REQUIRE(column.values.size() == 3);
    CHECK(column.values[0] == 1);
    CHECK(column.values[1] == 0);
    CHECK(column.values[2] == -1);

    const auto pairs = character_column(CycleType::parse("2,2"));
    BigCount squares = 0;
    for (const auto& v : pairs.values) squares += v * v;
    CHECK(squares == 8);
  }

  TEST_CASE("tables agree with Young's rule, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
      const auto table = character_table(n);
      std::vector<std::vector<int>> shapes, classes;
      for (const auto& lambda : table.partitions) shapes.push_back(lambda.parts());
      for (const auto& rho : table.classes) classes.push_back(rho.lengths());
      const auto expected = oracle::young_rule_table(shapes, classes);
      for (std::size_t l = 0; l < shapes.size(); ++l)
        for (std::size_t c = 0; c < classes.size(); ++c)
          CHECK_MESSAGE(table.values[l][c] == static_cast<long>(expected[l][c]), "n=" << n << " l=" << l << " c=" << c);
    }
  }

  TEST_CASE("trivial and identity columns") {
    for (int n = 1; n <= 10; ++n) {
      for (const auto& rho : enumerate_cycle_types(n)) CHECK(character(Partition({n}), rho) == 1);
      const auto column = character_column(CycleType::identity(n));
      for (std::size_t i = 0; i < column.partitions.size(); ++i) CHECK(column.values[i] == dimension(column.partitions[i]));
    }
  }

  TEST_CASE("long cycle column, n <= 18") {
    for (int n = 1; n <= 18; ++n) {
      const auto column = character_column(CycleType({n}));
      for (std::size_t i = 0; i < column.partitions.size(); ++i) {
        const auto& lambda = column.partitions[i];
        if (is_hook(lambda)) {
          const int leg = lambda.length() - 1;
          CHECK(column.values[i] == (leg % 2 == 0 ? 1 : -1));
        } else {
          CHECK(column.values[i] == 0);
        }
      }
    }
  }

  TEST_CASE("orthogonality and transpose twist, n <= 10") {
    for (int n = 1; n <= 10; ++n) {
      const auto table = character_table(n);
      const BigCount order = factorial(static_cast<unsigned long>(n));
      const std::size_t size = table.partitions.size();
      std::vector<BigCount> class_sizes;
      for (const auto& rho : table.classes) class_sizes.push_back(class_size(rho));
      for (std::size_t c = 0; c < size; ++c) {
        BigCount squares = 0;
        for (std::size_t l = 0; l < size; ++l) squares += table.values[l][c] * table.values[l][c];
        CHECK(squares * class_sizes[c] == order);
      }
      for (std::size_t l = 0; l < size; ++l)
        for (std::size_t m = l; m < size; ++m) {
          BigCount inner = 0;
          for (std::size_t c = 0; c < size; ++c) inner += class_sizes[c] * table.values[l][c] * table.values[m][c];
          CHECK(inner == (l == m ? order : BigCount(0)));
        }
      for (std::size_t l = 0; l < size; ++l) {
        const auto transpose = conjugate(table.partitions[l]);
        const auto at = std::find(table.partitions.begin(), table.partitions.end(), transpose) - table.partitions.begin();
        for (std::size_t c = 0; c < size; ++c)
          CHECK(table.values[static_cast<std::size_t>(at)][c] == table.classes[c].sign() * table.values[l][c]);
      }
    }
  }

  TEST_CASE("values exceeding 64 bits") {
    const Partition lambda({10, 8, 7, 6, 4, 3, 2});
    const BigCount d = dimension(lambda);
    REQUIRE(d > BigCount("9223372036854775807"));
    CHECK(character(lambda, CycleType::identity(40)) == d);
    const auto rho = CycleType::parse("3^10,2^5");
    CHECK(character(conjugate(lambda), rho) == rho.sign() * character(lambda, rho));
  }

  TEST_CASE("threads do not change columns") {
    const auto rho = CycleType::parse("3,2^2,1^5");
    const auto one = character_column(rho, 18, 1);
    const auto four = character_column(rho, 18, 4);
    CHECK(one.values == four.values);
  }

  TEST_CASE("resource guard") {
    CHECK_THROWS_AS(character_column(CycleType::identity(19)), ResourceGuard);
    CHECK_THROWS_AS(character_table(19), ResourceGuard);
    CHECK_NOTHROW(character_column(CycleType::parse("19"), 19));
  }

  TEST_CASE("character bound") {
    const auto trivial = verify_character_bound(Partition({6}), CycleType::parse("3,2,1"));
    CHECK(trivial.lhs == 1);
    CHECK(trivial.rhs.log() == doctest::Approx(0.0));
    CHECK(trivial.ok);

    const auto standard = verify_character_bound(Partition({9, 1}), CycleType({10}));
    CHECK(standard.lhs == 1);
    CHECK(standard.rhs.log() == doctest::Approx(std::log(9.0) / 10));
    CHECK(standard.ok);

    for (const auto& rho : enumerate_cycle_types(10)) {
      const auto column = character_column(rho);
      for (std::size_t i = 0; i < column.partitions.size(); ++i)
        CHECK(verify_character_bound(column.partitions[i], rho, column.values[i]).ok);
    }
  }

  TEST_CASE("cycle-count constant is the tightest") {
    for (int n = 4; n <= 9; ++n) {
      const double k = cycle_bound_constant(n);
      const double ln_n = std::log(double(n));
      double worst = -1e300;
      for (const auto& rho : enumerate_cycle_types(n))
        for (const auto& lambda : enumerate_partitions(n)) {
          const auto ch = character(lambda, rho);
          const auto d = dimension(lambda);
          if (ch == 0 || d < 2) continue;
          worst = std::max(worst, ln_n * log_abs(ch) / log_abs(d) - std::log(double(rho.cycles())));
        }
      CHECK(k == doctest::Approx(worst));
    }
  }
}
