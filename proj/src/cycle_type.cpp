#include "symwalk/cycle_type.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "symwalk/notation.hpp"

namespace symwalk {

CycleType::CycleType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
  for (int len : lengths_) {
    if (len < 1) throw std::invalid_argument("cycle lengths must be positive");
    ++counts_[len];
    n_ += len;
  }
}

CycleType CycleType::parse(std::string_view text, std::optional<int> expected_n) {
  CycleType out(parse_multiset(text));
  if (expected_n && out.n() != *expected_n)
    throw ParseError("cycle type '" + std::string(text) + "' has total " + std::to_string(out.n()) +
                     ", expected " + std::to_string(*expected_n));
  return out;
}

CycleType CycleType::identity(int n) { return CycleType(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int CycleType::count(int length) const {
  const auto it = counts_.find(length);
  return it == counts_.end() ? 0 : it->second;
}

int CycleType::smallest_cycle() const { return lengths_.empty() ? 0 : lengths_.back(); }

std::optional<int> CycleType::smallest_nontrivial_cycle() const {
  const auto it = counts_.upper_bound(1);
  if (it == counts_.end()) return std::nullopt;
  return it->first;
}

std::string CycleType::to_string() const { return format_multiset(lengths_, '+'); }

std::vector<CycleType> enumerate_cycle_types(int n) {
  std::vector<CycleType> out;
  for (const auto& lambda : enumerate_partitions(n)) out.push_back(CycleType::from_partition(lambda));
  return out;
}

BigCount centralizer_size(const CycleType& sigma) {
  BigCount out = 1;
  for (const auto& [len, mult] : sigma.multiplicities()) {
    BigCount power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(len), static_cast<unsigned long>(mult));
    out *= power * factorial(static_cast<unsigned long>(mult));
  }
  return out;
}

BigCount class_size(const CycleType& sigma) {
  BigCount out;
  mpz_divexact(out.get_mpz_t(), factorial(static_cast<unsigned long>(sigma.n())).get_mpz_t(),
               centralizer_size(sigma).get_mpz_t());
  return out;
}

OrbitGrowth orbit_growth(const CycleType& sigma) {
  const int n = sigma.n();
  if (n < 2) throw std::domain_error("orbit growth needs n >= 2");
  const double log_n = std::log(static_cast<double>(n));
  OrbitGrowth g;
  g.i_min = sigma.smallest_cycle();
  g.i_bis = sigma.smallest_nontrivial_cycle();
  g.f_cap = std::max(sigma.count(1), 1);
  g.e.assign(static_cast<std::size_t>(n), 0.0);

  long long covered = 0;  // Sigma_{i-1}
  for (int i = 1; i <= n; ++i) {
    const long long added = static_cast<long long>(i) * sigma.count(i);
    double e = 0.0;
    if (covered == 0) {
      if (added > 0) e = std::log(static_cast<double>(added)) / log_n;
    } else if (added > 0) {
      e = std::log1p(static_cast<double>(added) / static_cast<double>(covered)) / log_n;
    }
    g.e[static_cast<std::size_t>(i - 1)] = e;
    g.E += e / i;
    covered += added;
  }

  const int longest = sigma.lengths().front();
  long long cumulative = 0;  // F_k
  for (int k = 1; k <= longest; ++k) {
    cumulative += sigma.count(k);
    const double b = cumulative > 1 ? std::log(static_cast<double>(cumulative)) / log_n : 0.0;
    g.B += k < longest ? b / (static_cast<double>(k) * (k + 1)) : b / k;
  }
  return g;
}

double e_bound_cycles(const CycleType& sigma) {
  return std::log(static_cast<double>(std::max(sigma.cycles(), 2))) / std::log(static_cast<double>(sigma.n()));
}

double e_bound_imin(const CycleType& sigma) {
  const double i_min = sigma.smallest_cycle();
  return std::log(i_min * sigma.cycles()) / (i_min * std::log(static_cast<double>(sigma.n())));
}

double e_bound_ibis(const CycleType& sigma) {
  const auto i_bis = sigma.smallest_nontrivial_cycle();
  if (!i_bis) throw std::domain_error("i_bis is undefined for the identity");
  const int fixed = sigma.count(1);
  if (fixed == 0) throw std::domain_error("i_bis bound needs at least one fixed point");
  const double n = sigma.n();
  return 1.0 - std::log(n / fixed) / std::log(n) * (1.0 - 1.0 / *i_bis);
}

}  // namespace symwalk
