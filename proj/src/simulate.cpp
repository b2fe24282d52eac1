#include "symwalk/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "symwalk/mixing.hpp"
#include "symwalk/notation.hpp"

namespace symwalk {

namespace {

// Separate purposes draw from unrelated seeds so that, say, the walk and
// coset halves of a splitting estimate never share a stream.
enum class Purpose : std::uint64_t { Walk = 1, Coset = 2, Marked = 3, Maps = 4 };

std::uint64_t purpose_seed(std::uint64_t seed, Purpose purpose) {
  return seed ^ (static_cast<std::uint64_t>(purpose) * 0xd1b54a32d192ed03ULL);
}

template <class Acc, class Fn>
Acc run_chunks(const SamplingOptions& options, Purpose purpose, Fn fn) {
  if (options.samples < 0) throw std::invalid_argument("sample count must be nonnegative");
  const long long chunks = (options.samples + kSampleChunk - 1) / kSampleChunk;
  std::vector<Acc> partial(static_cast<std::size_t>(chunks));
  const std::uint64_t seed = purpose_seed(options.seed, purpose);
  auto work = [&](long long first, long long stride) {
    for (long long c = first; c < chunks; c += stride) {
      Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(c));
      const long long count = std::min(kSampleChunk, options.samples - c * kSampleChunk);
      for (long long i = 0; i < count; ++i) fn(rng, partial[static_cast<std::size_t>(c)]);
    }
  };
  const long long workers = std::clamp<long long>(options.threads, 1, std::max<long long>(chunks, 1));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (long long w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          work(w, workers);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Acc total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

void shuffle(std::vector<int>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) std::swap(values[i - 1], values[rng.below(i)]);
}

std::vector<int> shuffled_points(int n, Rng& rng) {
  std::vector<int> points(static_cast<std::size_t>(n));
  std::iota(points.begin(), points.end(), 0);
  shuffle(points, rng);
  return points;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

// Number of cycles of `perm` through each component root.
std::vector<int> cycles_per_root(const Perm& perm, DisjointSets& sets) {
  std::vector<int> out(static_cast<std::size_t>(perm.size()), 0);
  std::vector<char> seen(static_cast<std::size_t>(perm.size()), 0);
  for (int start = 0; start < perm.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++out[static_cast<std::size_t>(sets.find(start))];
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = perm(i)) seen[static_cast<std::size_t>(i)] = 1;
  }
  return out;
}

struct MapTally {
  Histogram vertices;
  long long euler_failures = 0;
  long long disconnected = 0;
  void merge(const MapTally& other) {
    vertices.merge(other.vertices);
    euler_failures += other.euler_failures;
    disconnected += other.disconnected;
  }
};

}  // namespace

void Histogram::add(int value) {
  if (value < 0) throw std::invalid_argument("histogram values must be nonnegative");
  if (static_cast<std::size_t>(value) >= counts_.size()) counts_.resize(static_cast<std::size_t>(value) + 1, 0);
  ++counts_[static_cast<std::size_t>(value)];
  ++total_;
}

void Histogram::merge(const Histogram& other) {
  if (other.counts_.size() > counts_.size()) counts_.resize(other.counts_.size(), 0);
  for (std::size_t i = 0; i < other.counts_.size(); ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
}

long long Histogram::count(int value) const {
  if (value < 0 || static_cast<std::size_t>(value) >= counts_.size()) return 0;
  return counts_[static_cast<std::size_t>(value)];
}

double Histogram::probability(int value) const {
  return total_ == 0 ? 0.0 : static_cast<double>(count(value)) / static_cast<double>(total_);
}

double Histogram::tail(int m) const {
  long long hits = 0;
  for (std::size_t i = static_cast<std::size_t>(std::max(m, 0)); i < counts_.size(); ++i) hits += counts_[i];
  return total_ == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total_);
}

double empirical_tv(const Histogram& hist, const std::vector<double>& pmf) {
  const std::size_t span = std::max(pmf.size(), hist.counts().size());
  double sum = 0;
  for (std::size_t k = 0; k < span; ++k) {
    const double target = k < pmf.size() ? pmf[k] : 0.0;
    sum += std::fabs(hist.probability(static_cast<int>(k)) - target);
  }
  return sum / 2;
}

std::vector<double> poisson_pmf(double mean, int max_value) {
  std::vector<double> out;
  double term = std::exp(-mean);
  for (int k = 0; k <= max_value; ++k) {
    out.push_back(term);
    term *= mean / (k + 1);
  }
  return out;
}

Perm sample_class_element(const CycleType& sigma, Rng& rng) {
  const auto order = shuffled_points(sigma.n(), rng);
  std::vector<int> images(order.size());
  std::size_t pos = 0;
  for (int len : sigma.lengths()) {
    for (int i = 0; i < len; ++i)
      images[static_cast<std::size_t>(order[pos + static_cast<std::size_t>(i)])] =
          order[pos + static_cast<std::size_t>((i + 1) % len)];
    pos += static_cast<std::size_t>(len);
  }
  return Perm(std::move(images));
}

Perm sample_uniform(int n, Rng& rng) { return Perm(shuffled_points(n, rng)); }

Perm sample_coset(int n, int parity, Rng& rng) {
  if (parity != 1 && parity != -1) throw std::invalid_argument("parity must be +1 or -1");
  if (n < 2 && parity == -1) throw std::invalid_argument("no odd permutations of fewer than two points");
  auto images = shuffled_points(n, rng);
  Perm p(std::move(images));
  if (p.sign() != parity) {
    auto swapped = p.images();
    std::swap(swapped[0], swapped[1]);
    p = Perm(std::move(swapped));
  }
  return p;
}

Perm sample_matching(int points, Rng& rng) {
  if (points % 2 != 0) throw std::invalid_argument("a perfect matching needs an even number of points");
  std::vector<int> pool(static_cast<std::size_t>(points));
  std::vector<int> where(static_cast<std::size_t>(points));
  std::iota(pool.begin(), pool.end(), 0);
  std::iota(where.begin(), where.end(), 0);
  auto remove = [&](int x) {
    const int last = pool.back();
    const int at = where[static_cast<std::size_t>(x)];
    pool[static_cast<std::size_t>(at)] = last;
    where[static_cast<std::size_t>(last)] = at;
    pool.pop_back();
  };
  std::vector<int> images(static_cast<std::size_t>(points), -1);
  for (int a = 0; a < points; ++a) {
    if (images[static_cast<std::size_t>(a)] >= 0) continue;
    remove(a);
    const int b = pool[rng.below(pool.size())];
    remove(b);
    images[static_cast<std::size_t>(a)] = b;
    images[static_cast<std::size_t>(b)] = a;
  }
  return Perm(std::move(images));
}

Histogram walk_fixed_points(const CycleType& sigma, int t, const SamplingOptions& options) {
  if (t < 1) throw std::invalid_argument("walk needs t >= 1");
  return run_chunks<Histogram>(options, Purpose::Walk, [&](Rng& rng, Histogram& hist) {
    Perm product = sample_class_element(sigma, rng);
    for (int step = 1; step < t; ++step) product = product * sample_class_element(sigma, rng);
    hist.add(product.fixed_points());
  });
}

Histogram coset_fixed_points(int n, int parity, const SamplingOptions& options) {
  return run_chunks<Histogram>(options, Purpose::Coset,
                               [&](Rng& rng, Histogram& hist) { hist.add(sample_coset(n, parity, rng).fixed_points()); });
}

Histogram marked_fixed_points(int n, int marked, const SamplingOptions& options) {
  if (marked < 0 || marked > n) throw std::invalid_argument("marked set must fit inside the points");
  return run_chunks<Histogram>(options, Purpose::Marked, [&](Rng& rng, Histogram& hist) {
    const Perm p = sample_uniform(n, rng);
    int hits = 0;
    for (int i = 0; i < marked; ++i) hits += p(i) == i;
    hist.add(hits);
  });
}

SplittingResult splitting_statistic(const CycleType& sigma, int m, const SamplingOptions& options) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("splitting threshold m must be even and at least 2");
  const int n = sigma.n();
  SplittingResult r;
  r.walk_tail = walk_fixed_points(sigma, 2, options).tail(m);
  r.coset_tail = coset_fixed_points(n, coset_target(sigma, 2), options).tail(m);
  r.statistic = r.walk_tail - r.coset_tail;
  const double s = static_cast<double>(std::max<long long>(options.samples, 1));
  r.standard_error =
      std::sqrt(r.walk_tail * (1 - r.walk_tail) / s + r.coset_tail * (1 - r.coset_tail) / s);
  r.alpha = static_cast<double>(sigma.count(2)) / n;
  const double a = std::min(r.alpha, 0.5);
  const int half = m / 2;
  r.excess_floor = std::exp(-a) / 2 * std::pow(a, half) / std::tgamma(half + 1.0);
  r.poisson_ceiling = 3.0 / std::tgamma(m + 1.0);
  return r;
}

GlueSpec GlueSpec::parse(std::string_view text) {
  GlueSpec spec;
  for (int sides : parse_multiset(text)) ++spec.faces[sides];
  if (spec.points() % 2 != 0) throw ParseError("total number of polygon sides must be even");
  return spec;
}

int GlueSpec::points() const {
  int total = 0;
  for (const auto& [sides, count] : faces) total += sides * count;
  return total;
}

int GlueSpec::face_count() const {
  int total = 0;
  for (const auto& [sides, count] : faces) total += count;
  return total;
}

CycleType GlueSpec::face_type() const {
  std::vector<int> lengths;
  for (const auto& [sides, count] : faces) lengths.insert(lengths.end(), static_cast<std::size_t>(count), sides);
  return CycleType(std::move(lengths));
}

SurfaceResult surface_from(const Perm& alpha, const Perm& beta) {
  const int points = alpha.size();
  DisjointSets sets(points);
  for (int i = 0; i < points; ++i) {
    sets.unite(i, alpha(i));
    sets.unite(i, beta(i));
  }
  const Perm vertex_rotation = alpha * beta;
  const auto vertices = cycles_per_root(vertex_rotation, sets);
  const auto faces = cycles_per_root(alpha, sets);
  std::vector<int> sides(static_cast<std::size_t>(points), 0);
  for (int i = 0; i < points; ++i) ++sides[static_cast<std::size_t>(sets.find(i))];

  SurfaceResult r;
  r.edges = points / 2;
  for (int root = 0; root < points; ++root) {
    if (sets.find(root) != root) continue;
    const auto idx = static_cast<std::size_t>(root);
    const int v = vertices[idx], e = sides[idx] / 2, f = faces[idx];
    ++r.components;
    r.vertices += v;
    r.faces += f;
    r.component_genus.push_back((2 - v + e - f) / 2);
    r.genus += r.component_genus.back();
  }
  r.euler_ok = r.vertices - r.edges + r.faces == 2 * r.components - 2 * r.genus;
  return r;
}

SurfaceResult glue_surface(const GlueSpec& spec, Rng& rng) {
  const int points = spec.points();
  if (points % 2 != 0) throw std::invalid_argument("total number of polygon sides must be even");
  const Perm alpha = sample_class_element(spec.face_type(), rng);
  const Perm beta = sample_matching(points, rng);
  return surface_from(alpha, beta);
}

std::vector<BigCount> stirling_first_kind(int m) {
  std::vector<BigCount> row{1};
  for (int size = 1; size <= m; ++size) {
    std::vector<BigCount> next(static_cast<std::size_t>(size) + 1, 0);
    for (int k = 1; k <= size; ++k) {
      next[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)];
      if (k < size) next[static_cast<std::size_t>(k)] += (size - 1) * row[static_cast<std::size_t>(k)];
    }
    row = std::move(next);
  }
  return row;
}

std::vector<Rational> coset_cycle_count_distribution(int points, int parity) {
  if (points < 2) throw std::invalid_argument("cosets need at least two points");
  const auto row = stirling_first_kind(points);
  const BigCount half = factorial(static_cast<unsigned long>(points)) / 2;
  std::vector<Rational> out;
  for (int k = 0; k <= points; ++k) {
    const int sign = (points - k) % 2 == 0 ? 1 : -1;
    Rational p = sign == parity ? Rational(row[static_cast<std::size_t>(k)], half) : Rational(0);
    p.canonicalize();
    out.push_back(p);
  }
  return out;
}

VertexComparison vertex_count_comparison(const GlueSpec& spec, const SamplingOptions& options) {
  const int points = spec.points();
  if (points % 2 != 0) throw std::invalid_argument("total number of polygon sides must be even");
  VertexComparison r;
  r.coset = spec.face_type().sign() * (spec.edges() % 2 == 0 ? 1 : -1);
  r.outside_regime = spec.faces.count(1) > 0;
  const CycleType faces = spec.face_type();
  auto tally = run_chunks<MapTally>(options, Purpose::Maps, [&](Rng& rng, MapTally& acc) {
    const Perm alpha = sample_class_element(faces, rng);
    const Perm beta = sample_matching(points, rng);
    const SurfaceResult s = surface_from(alpha, beta);
    acc.vertices.add(s.vertices);
    acc.euler_failures += !s.euler_ok;
    acc.disconnected += s.components > 1;
  });
  r.vertices = std::move(tally.vertices);
  r.euler_failures = tally.euler_failures;
  r.disconnected = tally.disconnected;
  for (const auto& p : coset_cycle_count_distribution(points, r.coset)) r.baseline.push_back(p.get_d());
  r.tv_estimate = empirical_tv(r.vertices, r.baseline);
  return r;
}

}  // namespace symwalk
