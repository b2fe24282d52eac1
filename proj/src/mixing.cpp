#include "symwalk/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "symwalk/degrees.hpp"

namespace symwalk {

namespace {

void exact_guard(int n, int max_n) {
  if (n > max_n)
    throw ResourceGuard("exact distribution refused: n = " + std::to_string(n) + " exceeds the limit " +
                        std::to_string(max_n));
}

}  // namespace

ClassFamily ClassFamily::power(const CycleType& sigma, int t) {
  if (t < 1) throw std::invalid_argument("class family needs at least one step");
  return {std::vector<CycleType>(static_cast<std::size_t>(t), sigma)};
}

int ClassFamily::n() const {
  if (classes.empty()) throw std::invalid_argument("empty class family");
  for (const auto& c : classes)
    if (c.n() != classes.front().n()) throw std::invalid_argument("classes in a family must share n");
  return classes.front().n();
}

int coset_target(const ClassFamily& family) {
  int sign = 1;
  for (const auto& c : family.classes) sign *= c.sign();
  return sign;
}

int coset_target(const CycleType& sigma, int t) { return (sigma.sign() == -1 && t % 2 == 1) ? -1 : 1; }

double ds_upper_bound(const ClassFamily& family, int max_n, int threads) {
  const int n = family.n();
  std::map<CycleType, CharacterColumn> columns;
  for (const auto& c : family.classes)
    if (!columns.count(c)) columns.emplace(c, character_column(c, max_n, threads));
  const auto& partitions = columns.begin()->second.partitions;
  Rational sum = 0;
  for (std::size_t l = 0; l < partitions.size(); ++l) {
    const Partition& lambda = partitions[l];
    if (lambda.row(1) == n || lambda.column(1) == n) continue;
    const BigCount d = dimension(lambda);
    // (d prod ch_i / d)^2 = (prod ch_i)^2 / d^{2(t-1)}
    BigCount num = 1;
    for (const auto& c : family.classes) num *= columns.at(c).values[l];
    BigCount den;
    mpz_pow_ui(den.get_mpz_t(), d.get_mpz_t(), 2 * (family.classes.size() - 1));
    sum += Rational(num * num, den);
  }
  sum.canonicalize();
  return 0.5 * std::sqrt(sum.get_d());
}

std::vector<ClassMass> exact_step_distribution(const CycleType& sigma, int t, int max_n) {
  const int n = sigma.n();
  exact_guard(n, max_n);
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  const CharacterTable table = character_table(n, max_n);
  const auto col = std::find(table.classes.begin(), table.classes.end(), sigma) - table.classes.begin();
  const BigCount n_factorial = factorial(static_cast<unsigned long>(n));

  // Weight of lambda: d (ch(sigma) / d)^t = ch^t / d^{t-1}.
  std::vector<Rational> weights;
  for (std::size_t l = 0; l < table.partitions.size(); ++l) {
    const BigCount d = dimension(table.partitions[l]);
    BigCount ch_power, d_power;
    mpz_pow_ui(ch_power.get_mpz_t(), table.values[l][static_cast<std::size_t>(col)].get_mpz_t(),
               static_cast<unsigned long>(t));
    if (t == 0) {
      weights.emplace_back(d);
    } else {
      mpz_pow_ui(d_power.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(t - 1));
      weights.emplace_back(ch_power, d_power);
    }
    weights.back().canonicalize();
  }

  std::vector<ClassMass> out;
  for (std::size_t k = 0; k < table.classes.size(); ++k) {
    Rational total = 0;
    for (std::size_t l = 0; l < table.partitions.size(); ++l) total += weights[l] * Rational(table.values[l][k]);
    Rational p = total * Rational(class_size(table.classes[k]), n_factorial);
    p.canonicalize();
    out.push_back({table.classes[k], p});
  }
  return out;
}

Rational exact_tv(const CycleType& sigma, int t, int max_n) {
  const int n = sigma.n();
  const int coset = coset_target(sigma, t);
  const BigCount n_factorial = factorial(static_cast<unsigned long>(n));
  Rational tv = 0;
  for (const auto& [cls, p] : exact_step_distribution(sigma, t, max_n)) {
    if (cls.sign() != coset) {
      if (sgn(p) != 0) throw std::logic_error("step distribution charges the wrong coset");
      continue;
    }
    // n = 1 has a single class and a coset of size 1.
    const Rational uniform = n >= 2 ? Rational(2 * class_size(cls), n_factorial) : Rational(1);
    tv += abs(p - uniform);
  }
  tv /= 2;
  tv.canonicalize();
  return tv;
}

double cutoff_time(const CycleType& sigma) {
  if (sigma.is_identity()) throw std::domain_error("cutoff time is undefined for the identity class");
  const double n = sigma.n();
  const double f = std::max(sigma.count(1), 1);
  return std::log(n) / std::log(n / f);
}

MixingReport mixing_report(const CycleType& sigma, int t, int character_max_n, int exact_max_n, int threads) {
  MixingReport r;
  r.t = t;
  r.target_coset = coset_target(sigma, t);
  r.ds_bound = ds_upper_bound(ClassFamily::power(sigma, t), character_max_n, threads);
  if (sigma.n() <= exact_max_n) r.exact_tv = exact_tv(sigma, t, exact_max_n);
  return r;
}

}  // namespace symwalk
