// Exact integer/rational aliases, log-domain reals and the shared
// factorial/binomial tables.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <string>

namespace symwalk {

/// Arbitrary-precision nonnegative integer (dimensions, hook products,
/// factorials). Signed in practice because characters reuse it.
using BigCount = mpz_class;
using Rational = mpq_class;

/// A positive real stored as its natural logarithm. Zero is log = -inf.
class LogReal {
 public:
  constexpr LogReal() = default;
  static constexpr LogReal from_log(double log_value) { return LogReal(log_value); }
  static LogReal from_value(double value) { return LogReal(std::log(value)); }
  static LogReal from(const BigCount& value);
  static LogReal from(const Rational& value);

  constexpr double log() const { return log_; }
  double value() const { return std::exp(log_); }

  LogReal operator*(LogReal other) const { return LogReal(log_ + other.log_); }
  LogReal operator/(LogReal other) const { return LogReal(log_ - other.log_); }
  LogReal pow(double exponent) const;

  auto operator<=>(const LogReal&) const = default;

 private:
  constexpr explicit LogReal(double log_value) : log_(log_value) {}
  double log_ = 0.0;
};

/// Natural log of a positive big integer, accurate to double precision.
double log_abs(const BigCount& value);
double log_abs(const Rational& value);

/// n!, memoized up to a fixed cap and computed directly beyond it.
/// Safe for concurrent readers.
BigCount factorial(unsigned long n);
BigCount binomial(unsigned long n, unsigned long k);

/// ln(n!) via lgamma.
double log_factorial(double n);

std::string to_string(const BigCount& value);
std::string to_string(const Rational& value);

}  // namespace symwalk
