#include "symwalk/bigint.hpp"

#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>

namespace symwalk {

namespace {

// Factorials above this are not memoized: the table would be quadratic in
// memory (10^4! alone is ~35k digits).
constexpr unsigned long kFactorialMemoCap = 2048;

class FactorialTable {
 public:
  BigCount get(unsigned long n) {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    if (table_.empty()) table_.emplace_back(1);
    while (table_.size() <= n) {
      const auto next = static_cast<unsigned long>(table_.size());
      table_.push_back(table_.back() * next);
    }
    return table_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<BigCount> table_;
};

FactorialTable& factorial_table() {
  static FactorialTable table;
  return table;
}

}  // namespace

LogReal LogReal::from(const BigCount& value) {
  if (sgn(value) == 0) return LogReal(-std::numeric_limits<double>::infinity());
  return LogReal(log_abs(value));
}

LogReal LogReal::from(const Rational& value) {
  if (sgn(value) == 0) return LogReal(-std::numeric_limits<double>::infinity());
  return LogReal(log_abs(value));
}

LogReal LogReal::pow(double exponent) const {
  if (exponent == 0.0) return LogReal(0.0);
  return LogReal(log_ * exponent);
}

double log_abs(const BigCount& value) {
  signed long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

double log_abs(const Rational& value) {
  return log_abs(BigCount(value.get_num())) - log_abs(BigCount(value.get_den()));
}

BigCount factorial(unsigned long n) {
  if (n <= kFactorialMemoCap) return factorial_table().get(n);
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigCount binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

double log_factorial(double n) { return std::lgamma(n + 1.0); }

std::string to_string(const BigCount& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

}  // namespace symwalk
