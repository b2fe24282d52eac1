// Monte Carlo sampling: uniform class elements, fixed points of random
// walk steps, splitting events, and random gluings of polygons.
//
// Sampling runs in fixed-size chunks, each on its own jumped stream of the
// seed, so results depend on the seed and sample count but not on the
// number of threads.
#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "symwalk/bigint.hpp"
#include "symwalk/cycle_type.hpp"
#include "symwalk/perm.hpp"
#include "symwalk/rng.hpp"

namespace symwalk {

struct SamplingOptions {
  long long samples = 100'000;
  std::uint64_t seed = 0;
  int threads = 1;
};

inline constexpr long long kSampleChunk = 8192;

/// Counts of a nonnegative integer statistic.
class Histogram {
 public:
  void add(int value);
  void merge(const Histogram& other);
  long long total() const { return total_; }
  long long count(int value) const;
  double probability(int value) const;
  /// Empirical P(value >= m).
  double tail(int m) const;
  int max_value() const { return static_cast<int>(counts_.size()) - 1; }
  const std::vector<long long>& counts() const { return counts_; }

 private:
  std::vector<long long> counts_;
  long long total_ = 0;
};

/// Plug-in total variation between a histogram and a probability vector.
double empirical_tv(const Histogram& hist, const std::vector<double>& pmf);
std::vector<double> poisson_pmf(double mean, int max_value);

Perm sample_class_element(const CycleType& sigma, Rng& rng);
Perm sample_uniform(int n, Rng& rng);
/// Uniform on the alternating group (parity +1) or the odd coset (-1).
Perm sample_coset(int n, int parity, Rng& rng);
/// Uniform fixed-point-free involution on an even number of points.
Perm sample_matching(int points, Rng& rng);

/// Fixed points of sigma_1 ... sigma_t with iid uniform sigma_i in the class.
Histogram walk_fixed_points(const CycleType& sigma, int t, const SamplingOptions& options);
Histogram coset_fixed_points(int n, int parity, const SamplingOptions& options);
/// Fixed points among the first `marked` points of a uniform permutation.
Histogram marked_fixed_points(int n, int marked, const SamplingOptions& options);

struct SplittingResult {
  double walk_tail = 0;   // P(f_1 >= m) after two steps
  double coset_tail = 0;  // same under the uniform coset measure
  double statistic = 0;
  double standard_error = 0;
  double alpha = 0;            // f_2 / n
  double excess_floor = 0;     // (e^{-a}/2) a^{m/2}/(m/2)!, a = min(alpha, 1/2)
  double poisson_ceiling = 0;  // 3 / m!
};

/// Throws std::invalid_argument unless m is even and positive.
SplittingResult splitting_statistic(const CycleType& sigma, int m, const SamplingOptions& options);

/// Polygons by side count; "3^20" is twenty triangles.
struct GlueSpec {
  std::map<int, int> faces;

  static GlueSpec parse(std::string_view text);
  int points() const;  // 2N
  int edges() const { return points() / 2; }
  int face_count() const;
  CycleType face_type() const;
};

struct SurfaceResult {
  int vertices = 0;  // cycles of alpha beta
  int edges = 0;
  int faces = 0;
  int components = 0;  // orbits of <alpha, beta>
  std::vector<int> component_genus;
  int genus = 0;
  bool euler_ok = true;  // V - E + F = 2 components - 2 genus
};

/// The surface glued from side rotation `alpha` and side pairing `beta`.
SurfaceResult surface_from(const Perm& alpha, const Perm& beta);
/// Throws std::invalid_argument when the side count is odd.
SurfaceResult glue_surface(const GlueSpec& spec, Rng& rng);

/// Unsigned Stirling numbers of the first kind c(m, k), k = 0..m.
std::vector<BigCount> stirling_first_kind(int m);
/// Law of the cycle count of a uniform permutation of `points` in the
/// coset of the given parity, indexed by cycle count.
std::vector<Rational> coset_cycle_count_distribution(int points, int parity);

struct VertexComparison {
  Histogram vertices;
  std::vector<double> baseline;
  double tv_estimate = 0;
  int coset = 1;
  bool outside_regime = false;  // monogons present
  long long euler_failures = 0;
  long long disconnected = 0;
};

VertexComparison vertex_count_comparison(const GlueSpec& spec, const SamplingOptions& options);

}  // namespace symwalk
