// Cycle types of permutation classes, orbit growth exponents and the
// upper bounds on them.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symwalk/bigint.hpp"
#include "symwalk/partition.hpp"

namespace symwalk {

class CycleType {
 public:
  CycleType() = default;
  /// Cycle lengths in any order; all must be positive.
  explicit CycleType(std::vector<int> lengths);
  /// Grammar "3^2,1". When `expected_n` is given the total must match.
  static CycleType parse(std::string_view text, std::optional<int> expected_n = std::nullopt);
  static CycleType identity(int n);
  static CycleType from_partition(const Partition& lambda) { return CycleType(lambda.parts()); }

  int n() const { return n_; }
  /// f_i, 0 for lengths that do not occur.
  int count(int length) const;
  const std::map<int, int>& multiplicities() const { return counts_; }
  /// Lengths sorted weakly decreasing.
  const std::vector<int>& lengths() const { return lengths_; }
  int cycles() const { return static_cast<int>(lengths_.size()); }
  int sign() const { return (n_ - cycles()) % 2 == 0 ? 1 : -1; }
  bool is_identity() const { return count(1) == n_; }
  int smallest_cycle() const;
  /// Smallest cycle length >= 2; empty for the identity.
  std::optional<int> smallest_nontrivial_cycle() const;
  Partition as_partition() const { return Partition(lengths_); }
  std::string to_string() const;

  bool operator==(const CycleType& other) const { return lengths_ == other.lengths_; }
  auto operator<=>(const CycleType& other) const { return lengths_ <=> other.lengths_; }

 private:
  std::vector<int> lengths_;
  std::map<int, int> counts_;
  int n_ = 0;
};

/// Every cycle type of degree n, in partition enumeration order.
std::vector<CycleType> enumerate_cycle_types(int n);

/// Centralizer order prod i^{f_i} f_i!.
BigCount centralizer_size(const CycleType& sigma);
/// n! / centralizer.
BigCount class_size(const CycleType& sigma);

struct OrbitGrowth {
  std::vector<double> e;  // e[i-1] = e_i for i = 1..n
  double E = 0;
  double B = 0;
  int i_min = 0;
  std::optional<int> i_bis;
  int f_cap = 1;  // max(f_1, 1)
};

/// Throws std::domain_error for n < 2.
OrbitGrowth orbit_growth(const CycleType& sigma);

double e_bound_cycles(const CycleType& sigma);
double e_bound_imin(const CycleType& sigma);
/// The bound on E itself (1 minus the deficit). Throws std::domain_error
/// for the identity or when there are no fixed points.
double e_bound_ibis(const CycleType& sigma);

}  // namespace symwalk
