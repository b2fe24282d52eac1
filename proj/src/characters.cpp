#include "symwalk/characters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <thread>

#include "symwalk/degrees.hpp"

namespace symwalk {

namespace {

struct Overflow {};

// Checked arithmetic lets the recursion run in int64 and restart in
// BigCount on the (so far unseen) inputs where that is not enough.
std::int64_t add_signed(std::int64_t acc, std::int64_t term, bool negate) {
  std::int64_t out;
  if (negate ? __builtin_sub_overflow(acc, term, &out) : __builtin_add_overflow(acc, term, &out)) throw Overflow{};
  return out;
}

BigCount add_signed(const BigCount& acc, const BigCount& term, bool negate) {
  return negate ? BigCount(acc - term) : BigCount(acc + term);
}

BigCount to_big(std::int64_t v) { return BigCount(static_cast<long>(v)); }
BigCount to_big(const BigCount& v) { return v; }

struct Strip {
  std::vector<int> remainder;
  bool odd_height = false;
};

// Border strips of size k, found on the beta-set (first-column hook
// lengths): moving a bead from x to an empty x - k removes a strip whose
// height is the number of beads strictly between.
std::vector<Strip> removable_strips(const std::vector<int>& parts, int k) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beads(parts.size());
  for (int i = 0; i < len; ++i) beads[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (len - 1 - i);
  std::vector<Strip> out;
  for (int i = 0; i < len; ++i) {
    const int from = beads[static_cast<std::size_t>(i)];
    const int to = from - k;
    if (to < 0 || std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
    int between = 0;
    for (int b : beads) between += (b > to && b < from);
    std::vector<int> moved = beads;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    Strip strip;
    strip.odd_height = between % 2 == 1;
    for (int j = 0; j < len; ++j) {
      const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) strip.remainder.push_back(part);
    }
    out.push_back(std::move(strip));
  }
  return out;
}

template <class Value>
class Evaluator {
 public:
  explicit Evaluator(const CycleType& rho) : cycles_(rho.lengths()) {}

  // Character of `parts` on the cycles from index `step` on.
  Value eval(const std::vector<int>& parts, std::size_t step) {
    if (step == cycles_.size()) return Value(parts.empty() ? 1 : 0);
    Key key{step, parts};
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Value total(0);
    for (const Strip& strip : removable_strips(parts, cycles_[step]))
      total = add_signed(total, eval(strip.remainder, step + 1), strip.odd_height);
    std::unique_lock lock(mutex_);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  using Key = std::pair<std::size_t, std::vector<int>>;
  std::vector<int> cycles_;
  std::map<Key, Value> memo_;
  std::shared_mutex mutex_;
};

template <class Value>
std::vector<BigCount> column_values(const CycleType& rho, const std::vector<Partition>& partitions, int threads) {
  Evaluator<Value> evaluator(rho);
  std::vector<BigCount> values(partitions.size());
  const std::size_t workers = static_cast<std::size_t>(std::clamp(threads, 1, static_cast<int>(partitions.size())));
  auto work = [&](std::size_t offset) {
    for (std::size_t i = offset; i < partitions.size(); i += workers)
      values[i] = to_big(evaluator.eval(partitions[i].parts(), 0));
  };
  if (workers == 1) {
    work(0);
    return values;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        work(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return values;
}

std::vector<BigCount> exact_column(const CycleType& rho, const std::vector<Partition>& partitions, int threads) {
  try {
    return column_values<std::int64_t>(rho, partitions, threads);
  } catch (const Overflow&) {
    return column_values<BigCount>(rho, partitions, threads);
  }
}

void guard(int n, int max_n) {
  if (n > max_n)
    throw ResourceGuard("character computation refused: n = " + std::to_string(n) + " exceeds the limit " +
                        std::to_string(max_n));
}

}  // namespace

BigCount character(const Partition& lambda, const CycleType& rho) {
  if (lambda.size() != rho.n()) throw std::invalid_argument("character: partition and cycle type sizes differ");
  return exact_column(rho, {lambda}, 1).front();
}

CharacterColumn character_column(const CycleType& rho, int max_n, int threads) {
  guard(rho.n(), max_n);
  CharacterColumn col;
  col.n = rho.n();
  col.rho = rho;
  col.partitions = enumerate_partitions(rho.n());
  col.values = exact_column(rho, col.partitions, threads);
  return col;
}

CharacterTable character_table(int n, int max_n, int threads) {
  guard(n, max_n);
  CharacterTable table;
  table.n = n;
  table.partitions = enumerate_partitions(n);
  table.classes = enumerate_cycle_types(n);
  table.values.assign(table.partitions.size(), std::vector<BigCount>(table.classes.size()));
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    const auto values = exact_column(table.classes[c], table.partitions, threads);
    for (std::size_t l = 0; l < values.size(); ++l) table.values[l][c] = values[l];
  }
  return table;
}

CharacterBoundCheck verify_character_bound(const Partition& lambda, const CycleType& rho, const BigCount& ch) {
  CharacterBoundCheck out;
  out.lhs = abs(ch);
  const double exponent = orbit_growth(rho).E;
  out.rhs = LogReal::from(virtual_degree(lambda)).pow(exponent);
  out.ok = sgn(out.lhs) == 0 || log_abs(out.lhs) <= out.rhs.log() + std::log1p(1e-9);
  return out;
}

CharacterBoundCheck verify_character_bound(const Partition& lambda, const CycleType& rho) {
  return verify_character_bound(lambda, rho, character(lambda, rho));
}

double cycle_bound_constant(int n, int max_n) {
  const CharacterTable table = character_table(n, max_n);
  const double log_n = std::log(static_cast<double>(n));
  double worst = -INFINITY;
  for (std::size_t l = 0; l < table.partitions.size(); ++l) {
    const BigCount d = dimension(table.partitions[l]);
    if (d < 2) continue;
    const double log_d = log_abs(d);
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
      const BigCount& ch = table.values[l][c];
      if (sgn(ch) == 0) continue;
      const double k = log_abs(ch) / log_d * log_n - std::log(static_cast<double>(table.classes[c].cycles()));
      worst = std::max(worst, k);
    }
  }
  return worst;
}

}  // namespace symwalk
