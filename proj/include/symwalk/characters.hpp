// Irreducible characters of symmetric groups by border-strip removal.
#pragma once

#include <stdexcept>
#include <vector>

#include "symwalk/bigint.hpp"
#include "symwalk/cycle_type.hpp"
#include "symwalk/partition.hpp"

namespace symwalk {

inline constexpr int kDefaultCharacterMaxN = 18;

/// Thrown when a request exceeds a configured size threshold.
class ResourceGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ch^lambda(rho). Throws std::invalid_argument when sizes differ.
BigCount character(const Partition& lambda, const CycleType& rho);

struct CharacterColumn {
  int n = 0;
  CycleType rho;
  std::vector<Partition> partitions;  // enumerate_partitions(n) order
  std::vector<BigCount> values;
};

/// Every ch^lambda(rho), lambda |- n, sharing one memo. `threads` workers
/// split the partitions; results do not depend on it.
CharacterColumn character_column(const CycleType& rho, int max_n = kDefaultCharacterMaxN, int threads = 1);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;
  std::vector<CycleType> classes;             // same order as partitions
  std::vector<std::vector<BigCount>> values;  // values[lambda][class]
};

CharacterTable character_table(int n, int max_n = kDefaultCharacterMaxN, int threads = 1);

struct CharacterBoundCheck {
  BigCount lhs;    // |ch|
  LogReal rhs;     // D(lambda)^{E(rho)}
  bool ok = true;  // lhs <= rhs (1 + 1e-9)
};

CharacterBoundCheck verify_character_bound(const Partition& lambda, const CycleType& rho);
CharacterBoundCheck verify_character_bound(const Partition& lambda, const CycleType& rho, const BigCount& ch);

/// Smallest K with |ch| <= d^{(ln cyc + K) / ln n} over all lambda |- n
/// with d >= 2 and all classes with ch != 0.
double cycle_bound_constant(int n, int max_n = kDefaultCharacterMaxN);

}  // namespace symwalk
