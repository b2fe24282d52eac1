// Dimensions, virtual degrees, augmented and sliced dimensions, and the
// exact relations between them.
#pragma once

#include <optional>
#include <vector>

#include "symwalk/bigint.hpp"
#include "symwalk/partition.hpp"
#include "symwalk/slicing.hpp"

namespace symwalk {

/// d = n! / H(lambda, lambda).
BigCount dimension(const Partition& lambda);
/// ln d, from exact integers up to n = 40 and from log-gamma sums beyond.
double log_dimension(const Partition& lambda);

/// D = (n-1)! / prod a_i! b_i!.
BigCount virtual_degree(const Partition& lambda);
/// d+ = n! / ((prod s_i)(prod a_i! b_i!)).
BigCount augmented_dimension(const Partition& lambda);
/// d^{*P} = n! / H^{*P}(lambda, lambda); not integral in general.
Rational p_dimension(const Partition& lambda, const SliceSpec& spec);

/// G(m) = prod_{i=0}^{m-2} i! for integer m >= 1.
BigCount barnes_g(int m);

struct DegreeReport {
  Partition lambda;
  BigCount dimension;
  LogReal log_dimension;
  BigCount virtual_degree;
  BigCount augmented_dimension;
  /// (ln D - ln d) ln n / ln d; empty when d = 1.
  std::optional<double> exponent_gap;
};

DegreeReport degree_report(const Partition& lambda);
std::optional<double> exponent_gap(const BigCount& dimension, const BigCount& virtual_degree, int n);

struct CenterBound {
  Rational ratio;         // d / (binom(n,c) d_s d_c)
  double lower_log = 0;   // -6 sqrt(c)
  bool lower_ok = true;   // ratio >= e^{-6 sqrt c}, 1e-9 relative slack
  bool upper_ok = true;   // ratio <= 1
};

CenterBound center_bound_report(const Partition& lambda);
/// The same ratio as a product of truncated-arm and truncated-leg factors,
/// [a1! / H(lambda, a1)] [b1! / H(lambda, b1)].
Rational center_ratio_factored(const Partition& lambda);

enum class SharpnessFamily { Square, AlmostFlat };

/// Square(p) = [p^p]; AlmostFlat(n) = [n-2, 2].
Partition sharpness_member(SharpnessFamily family, int parameter);

struct SharpnessRow {
  int parameter = 0;
  int n = 0;
  double log_dimension = 0;
  double log_virtual_degree = 0;
  std::optional<double> exponent_gap;
};

std::vector<SharpnessRow> sharpness_scan(SharpnessFamily family, const std::vector<int>& parameters);

struct GapMaximum {
  int n = 0;
  double gap = 0;
  Partition argmax;
};

/// Largest exponent gap over lambda |- n with d >= 2.
GapMaximum exponent_gap_maximum(int n);

}  // namespace symwalk
