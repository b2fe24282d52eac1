// Witten zeta sums sum_{lambda in A} d_lambda^{-s} over families of
// partitions, and scans along s = alpha / ln n.
#pragma once

#include <optional>
#include <vector>

#include "symwalk/bigint.hpp"
#include "symwalk/partition.hpp"

namespace symwalk {

enum class ZetaSubset {
  LambdaK,     // lambda'_1 <= lambda_1 <= n - k
  LambdaSymK,  // max(lambda_1, lambda'_1) <= n - k
  StarStar,    // everything except [n] and [1^n]
};

struct ZetaQuery {
  int n = 0;
  ZetaSubset subset = ZetaSubset::StarStar;
  int k = 0;
  double s = 1.0;
};

bool in_subset(const Partition& lambda, ZetaSubset subset, int k);
std::vector<Partition> members(const ZetaQuery& query);

/// Up to this n sums run over every member with exact log-dimensions.
inline constexpr int kZetaEnumerationLimit = 40;

struct ZetaResult {
  double value = 0;
  double log_value = 0;
  bool enumerated = true;  // false: depth expansion for large n
  bool truncated = false;  // depth expansion stopped before converging
  long long terms = 0;
};

ZetaResult zeta(const ZetaQuery& query);

/// Exact sum for integer s >= 0, n <= kZetaEnumerationLimit.
Rational zeta_exact(const ZetaQuery& query, int s);

/// The symmetric sum rebuilt from one-sided data:
/// 2 zeta(LambdaK(k)) - zeta({lambda_1 = lambda'_1 <= n - k}).
double zeta_sym_from_one_sided(int n, int k, double s);

struct ThresholdRow {
  int n = 0;
  double alpha = 0;
  double s = 0;
  double zeta = 0;
  double reference = 0;  // e^{-(k/12) alpha}
  bool truncated = false;
};

std::vector<ThresholdRow> threshold_scan(const std::vector<int>& n_grid, const std::vector<double>& alpha_grid, int k);

}  // namespace symwalk
