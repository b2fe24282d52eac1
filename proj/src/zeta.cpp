#include "symwalk/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "symwalk/degrees.hpp"

namespace symwalk {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kDepthRelativeStop = 1e-13;
constexpr long long kDepthTermCap = 5'000'000;

class LogSum {
 public:
  void add(double log_term) {
    if (log_term == kNegInf) return;
    if (log_term <= max_) {
      scaled_ += std::exp(log_term - max_);
    } else {
      scaled_ = scaled_ * std::exp(max_ - log_term) + 1.0;
      max_ = log_term;
    }
  }
  double log() const { return scaled_ == 0.0 ? kNegInf : max_ + std::log(scaled_); }

 private:
  double max_ = kNegInf;
  double scaled_ = 0.0;
};

struct Member {
  Partition lambda;
  double log_dimension;
};

const std::vector<Member>& all_log_dimensions(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Member>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Member> members;
    for (auto& lambda : enumerate_partitions(n)) {
      const double log_d = log_abs(dimension(lambda));
      members.push_back({std::move(lambda), log_d});
    }
    it = cache.emplace(n, std::move(members)).first;
  }
  return it->second;
}

ZetaResult finish(const LogSum& sum, long long terms, bool enumerated, bool truncated) {
  ZetaResult r;
  r.log_value = sum.log();
  r.value = std::exp(r.log_value);
  r.enumerated = enumerated;
  r.truncated = truncated;
  r.terms = terms;
  return r;
}

double log_hook_product(const Partition& nu) {
  double sum = 0;
  for (int i = 1; i <= nu.length(); ++i)
    for (int j = 1; j <= nu.row(i); ++j) sum += std::log(static_cast<double>(hook_length(nu, {i, j})));
  return sum;
}

// For n past the enumeration limit, partitions are visited by depth
// j = n - max(lambda_1, lambda'_1). At depth j the wide representatives are
// lambda = [n - j, nu] with nu |- j and lambda'_1 <= n - j; a transpose is
// a distinct member unless lambda_1 = lambda'_1. Depths run until two in a
// row contribute below a relative 1e-13, or until every partition is seen.
ZetaResult zeta_by_depth(const ZetaQuery& q) {
  const int n = q.n;
  int first = 0;
  bool one_sided = false;
  switch (q.subset) {
    case ZetaSubset::StarStar: first = 1; break;
    case ZetaSubset::LambdaK: first = q.k; one_sided = true; break;
    case ZetaSubset::LambdaSymK: first = q.k; break;
  }
  const double log_n_factorial = log_factorial(n);
  const double log_two = std::log(2.0);
  LogSum total;
  long long terms = 0;
  int quiet_depths = 0;
  for (int j = std::max(first, 0); j < n; ++j) {
    const int top = n - j;
    LogSum depth;
    for_each_partition(j, [&](const std::vector<int>& parts) {
      const int tall = static_cast<int>(parts.size()) + 1;
      if (tall > top || (!parts.empty() && parts[0] > top)) return;
      const Partition nu(parts);
      double log_hooks = log_hook_product(nu) + log_factorial(top - nu.row(1));
      for (int c = 1; c <= nu.row(1); ++c) log_hooks += std::log(static_cast<double>(top - c + 1 + nu.column(c)));
      double log_term = -q.s * (log_n_factorial - log_hooks);
      if (!one_sided && tall < top) log_term += log_two;
      depth.add(log_term);
      ++terms;
    });
    const double depth_log = depth.log();
    const double before = total.log();
    total.add(depth_log);
    if (before != kNegInf && depth_log < before + std::log(kDepthRelativeStop)) {
      if (++quiet_depths == 2) return finish(total, terms, false, false);
    } else {
      quiet_depths = 0;
    }
    if (terms > kDepthTermCap) return finish(total, terms, false, true);
  }
  return finish(total, terms, false, false);
}

}  // namespace

bool in_subset(const Partition& lambda, ZetaSubset subset, int k) {
  const int n = lambda.size();
  const int wide = lambda.row(1);
  const int tall = lambda.column(1);
  switch (subset) {
    case ZetaSubset::LambdaK: return tall <= wide && wide <= n - k;
    case ZetaSubset::LambdaSymK: return std::max(wide, tall) <= n - k;
    case ZetaSubset::StarStar: return wide != n && tall != n;
  }
  return false;
}

std::vector<Partition> members(const ZetaQuery& query) {
  std::vector<Partition> out;
  for (auto& lambda : enumerate_partitions(query.n))
    if (in_subset(lambda, query.subset, query.k)) out.push_back(std::move(lambda));
  return out;
}

ZetaResult zeta(const ZetaQuery& query) {
  if (query.n < 2) throw std::invalid_argument("zeta: n must be at least 2");
  if (query.k < 0) throw std::invalid_argument("zeta: k must be nonnegative");
  if (query.s < 0) throw std::invalid_argument("zeta: s must be nonnegative");
  if (query.n > kZetaEnumerationLimit) return zeta_by_depth(query);
  LogSum sum;
  long long terms = 0;
  for (const auto& m : all_log_dimensions(query.n)) {
    if (!in_subset(m.lambda, query.subset, query.k)) continue;
    sum.add(-query.s * m.log_dimension);
    ++terms;
  }
  return finish(sum, terms, true, false);
}

Rational zeta_exact(const ZetaQuery& query, int s) {
  if (s < 0) throw std::invalid_argument("zeta_exact: s must be nonnegative");
  if (query.n > kZetaEnumerationLimit) throw std::invalid_argument("zeta_exact: n too large for enumeration");
  Rational sum = 0;
  for (const auto& lambda : members(query)) {
    BigCount power;
    mpz_pow_ui(power.get_mpz_t(), dimension(lambda).get_mpz_t(), static_cast<unsigned long>(s));
    sum += Rational(1, power);
  }
  sum.canonicalize();
  return sum;
}

double zeta_sym_from_one_sided(int n, int k, double s) {
  if (n > kZetaEnumerationLimit) throw std::invalid_argument("zeta_sym_from_one_sided: n too large for enumeration");
  LogSum one_sided, balanced;
  for (const auto& m : all_log_dimensions(n)) {
    if (in_subset(m.lambda, ZetaSubset::LambdaK, k)) one_sided.add(-s * m.log_dimension);
    if (m.lambda.row(1) == m.lambda.column(1) && m.lambda.row(1) <= n - k) balanced.add(-s * m.log_dimension);
  }
  return 2.0 * std::exp(one_sided.log()) - std::exp(balanced.log());
}

std::vector<ThresholdRow> threshold_scan(const std::vector<int>& n_grid, const std::vector<double>& alpha_grid, int k) {
  std::vector<ThresholdRow> rows;
  for (int n : n_grid) {
    if (n < 3) throw std::invalid_argument("threshold_scan: n must be at least 3");
    for (double alpha : alpha_grid) {
      const double s = alpha / std::log(static_cast<double>(n));
      const auto z = zeta({n, ZetaSubset::LambdaSymK, k, s});
      rows.push_back({n, alpha, s, z.value, std::exp(-(k / 12.0) * alpha), z.truncated});
    }
  }
  return rows;
}

}  // namespace symwalk
