// Products of uniform conjugacy-class measures: L2 upper bounds, exact
// step distributions on the class-function basis, total variation to the
// uniform measure on the target coset, and cutoff times.
#pragma once

#include <optional>
#include <vector>

#include "symwalk/bigint.hpp"
#include "symwalk/characters.hpp"
#include "symwalk/cycle_type.hpp"

namespace symwalk {

inline constexpr int kDefaultExactTvMaxN = 10;

struct ClassFamily {
  std::vector<CycleType> classes;

  /// t copies of one class.
  static ClassFamily power(const CycleType& sigma, int t);
  int n() const;
};

/// +1 for the alternating group, -1 for the odd coset.
int coset_target(const ClassFamily& family);
/// Coset of t steps of one class; t = 0 is the even coset.
int coset_target(const CycleType& sigma, int t);

/// (1/2) sqrt(sum over lambda other than [n], [1^n] of (d prod chi_i)^2),
/// accumulated exactly.
double ds_upper_bound(const ClassFamily& family, int max_n = kDefaultCharacterMaxN, int threads = 1);

struct ClassMass {
  CycleType cls;
  Rational probability;
};

/// Law of the conjugacy class of a t-step product, by Fourier inversion.
std::vector<ClassMass> exact_step_distribution(const CycleType& sigma, int t, int max_n = kDefaultExactTvMaxN);

/// Total variation between t steps and the uniform measure on the coset.
Rational exact_tv(const CycleType& sigma, int t, int max_n = kDefaultExactTvMaxN);

/// ln n / ln(n / f) with f = max(f_1, 1). Throws std::domain_error for the
/// identity.
double cutoff_time(const CycleType& sigma);

struct MixingReport {
  int t = 0;
  int target_coset = 1;
  double ds_bound = 0;
  std::optional<Rational> exact_tv;  // present when n <= the exact threshold
};

MixingReport mixing_report(const CycleType& sigma, int t, int character_max_n = kDefaultCharacterMaxN,
                           int exact_max_n = kDefaultExactTvMaxN, int threads = 1);

}  // namespace symwalk
