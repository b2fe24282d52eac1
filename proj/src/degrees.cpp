#include "symwalk/degrees.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace symwalk {

namespace {

constexpr int kExactLogLimit = 40;

BigCount divide_exact(const BigCount& num, const BigCount& den) {
  assert(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
  BigCount out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

BigCount arm_leg_factorials(const Anatomy& a) {
  BigCount out = 1;
  for (std::size_t i = 0; i < a.arms.size(); ++i)
    out *= factorial(static_cast<unsigned long>(a.arms[i])) * factorial(static_cast<unsigned long>(a.legs[i]));
  return out;
}

unsigned long as_ulong(int v) { return static_cast<unsigned long>(v); }

}  // namespace

BigCount dimension(const Partition& lambda) {
  return divide_exact(factorial(as_ulong(lambda.size())), hook_product(lambda));
}

double log_dimension(const Partition& lambda) {
  if (lambda.size() <= kExactLogLimit) return log_abs(dimension(lambda));
  double sum = log_factorial(lambda.size());
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) sum -= std::log(static_cast<double>(hook_length(lambda, {i, j})));
  return sum;
}

BigCount virtual_degree(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("virtual_degree: empty partition");
  return divide_exact(factorial(as_ulong(lambda.size() - 1)), arm_leg_factorials(lambda.anatomy()));
}

BigCount augmented_dimension(const Partition& lambda) {
  const auto& a = lambda.anatomy();
  BigCount den = arm_leg_factorials(a);
  for (int s : a.diagonal_hooks) den *= s;
  return divide_exact(factorial(as_ulong(lambda.size())), den);
}

Rational p_dimension(const Partition& lambda, const SliceSpec& spec) {
  Rational out(factorial(as_ulong(lambda.size())), sliced_hook_product(lambda, spec));
  out.canonicalize();
  return out;
}

BigCount barnes_g(int m) {
  if (m < 1) throw std::invalid_argument("barnes_g: m must be positive");
  BigCount out = 1;
  for (int i = 0; i <= m - 2; ++i) out *= factorial(as_ulong(i));
  return out;
}

std::optional<double> exponent_gap(const BigCount& dimension, const BigCount& virtual_degree, int n) {
  if (dimension < 2) return std::nullopt;
  const double log_d = log_abs(dimension);
  return (log_abs(virtual_degree) - log_d) * std::log(static_cast<double>(n)) / log_d;
}

DegreeReport degree_report(const Partition& lambda) {
  DegreeReport r{lambda, dimension(lambda), {}, virtual_degree(lambda), augmented_dimension(lambda), {}};
  r.log_dimension = LogReal::from(r.dimension);
  r.exponent_gap = exponent_gap(r.dimension, r.virtual_degree, lambda.size());
  return r;
}

CenterBound center_bound_report(const Partition& lambda) {
  const auto& a = lambda.anatomy();
  const int n = lambda.size();
  const int c = a.center;
  const BigCount d_s = dimension(lambda.external_hook());
  const BigCount d_c = lambda.center().empty() ? BigCount(1) : dimension(lambda.center());
  CenterBound out;
  out.ratio = Rational(dimension(lambda), binomial(as_ulong(n), as_ulong(c)) * d_s * d_c);
  out.ratio.canonicalize();
  out.lower_log = -6.0 * std::sqrt(static_cast<double>(c));
  const double log_ratio = log_abs(out.ratio);
  out.lower_ok = log_ratio >= out.lower_log + std::log1p(-1e-9);
  out.upper_ok = out.ratio <= 1;
  return out;
}

Rational center_ratio_factored(const Partition& lambda) {
  const auto& a = lambda.anatomy();
  if (a.durfee == 0) return 1;
  std::vector<Box> arm, leg;
  for (int j = 2; j <= lambda.row(1); ++j) arm.push_back({1, j});
  for (int r = 2; r <= lambda.column(1); ++r) leg.push_back({r, 1});
  Rational arm_factor(factorial(as_ulong(a.arms[0])), hook_product(lambda, arm));
  Rational leg_factor(factorial(as_ulong(a.legs[0])), hook_product(lambda, leg));
  Rational out = arm_factor * leg_factor;
  out.canonicalize();
  return out;
}

Partition sharpness_member(SharpnessFamily family, int parameter) {
  switch (family) {
    case SharpnessFamily::Square:
      if (parameter < 1) throw std::invalid_argument("square side must be positive");
      return Partition(std::vector<int>(as_ulong(parameter), parameter));
    case SharpnessFamily::AlmostFlat:
      if (parameter < 4) throw std::invalid_argument("almost-flat family needs n >= 4");
      return Partition({parameter - 2, 2});
  }
  throw std::invalid_argument("unknown sharpness family");
}

std::vector<SharpnessRow> sharpness_scan(SharpnessFamily family, const std::vector<int>& parameters) {
  std::vector<SharpnessRow> rows;
  for (int p : parameters) {
    const Partition lambda = sharpness_member(family, p);
    const BigCount d = dimension(lambda);
    const BigCount big_d = virtual_degree(lambda);
    rows.push_back({p, lambda.size(), log_abs(d), log_abs(big_d), exponent_gap(d, big_d, lambda.size())});
  }
  return rows;
}

GapMaximum exponent_gap_maximum(int n) {
  GapMaximum best{n, -INFINITY, {}};
  for (const auto& lambda : enumerate_partitions(n)) {
    const auto gap = exponent_gap(dimension(lambda), virtual_degree(lambda), n);
    if (gap && *gap > best.gap) {
      best.gap = *gap;
      best.argmax = lambda;
    }
  }
  return best;
}

}  // namespace symwalk
