// Independent brute-force routes used as test oracles. None of these call
// the library's formulas for the quantity they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// p(n) by Euler's pentagonal recurrence.
inline std::vector<long long> partition_counts(int max_n) {
  std::vector<long long> p(static_cast<std::size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    long long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long long sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

/// Conjugate by counting rows of length >= j.
inline std::vector<int> column_counts(const std::vector<int>& rows) {
  std::vector<int> cols;
  for (int j = 1; !rows.empty() && j <= rows[0]; ++j)
    cols.push_back(static_cast<int>(std::count_if(rows.begin(), rows.end(), [j](int r) { return r >= j; })));
  return cols;
}

/// Standard Young tableaux, counted by removing the box holding n.
inline mpz_class standard_tableaux(const std::vector<int>& rows) {
  static std::map<std::vector<int>, mpz_class> memo;
  if (rows.empty()) return 1;
  if (auto it = memo.find(rows); it != memo.end()) return it->second;
  mpz_class total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool corner = i + 1 == rows.size() || rows[i + 1] < rows[i];
    if (!corner) continue;
    std::vector<int> smaller = rows;
    if (--smaller[i] == 0) smaller.pop_back();
    total += standard_tableaux(smaller);
  }
  memo.emplace(rows, total);
  return total;
}

/// Every permutation of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> cycle_lengths(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> out;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(p[i])) {
      seen[i] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Lexicographic rank of a permutation (Lehmer code).
inline std::size_t rank(const std::vector<int>& p) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < p.size(); ++j) smaller += p[j] < p[i];
    r = r * (p.size() - i) + smaller;
  }
  return r;
}

/// Law of the cycle type of c_1 c_2 ... c_t for iid uniform c_i in the
/// class `lengths`, by pushing exact counts over the whole group.
inline std::map<std::vector<int>, mpq_class> convolution(const std::vector<int>& lengths, int t) {
  const int n = std::accumulate(lengths.begin(), lengths.end(), 0);
  const auto group = all_permutations(n);
  std::vector<std::size_t> cls;
  for (std::size_t g = 0; g < group.size(); ++g)
    if (cycle_lengths(group[g]) == lengths) cls.push_back(g);
  std::vector<mpz_class> count(group.size(), 0);
  count[0] = 1;  // identity is rank 0
  for (int step = 0; step < t; ++step) {
    std::vector<mpz_class> next(group.size(), 0);
    for (std::size_t g = 0; g < group.size(); ++g) {
      if (count[g] == 0) continue;
      for (std::size_t c : cls) {
        std::vector<int> prod(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
          prod[static_cast<std::size_t>(i)] = group[g][static_cast<std::size_t>(group[c][static_cast<std::size_t>(i)])];
        next[rank(prod)] += count[g];
      }
    }
    count = std::move(next);
  }
  mpz_class total = 0;
  for (const auto& c : count) total += c;
  std::map<std::vector<int>, mpq_class> out;
  for (std::size_t g = 0; g < group.size(); ++g) {
    if (count[g] == 0) continue;
    out[cycle_lengths(group[g])] += mpq_class(count[g], total);
  }
  for (auto& [k, v] : out) v.canonicalize();
  return out;
}

/// Number of maps rows -> sets of points constant on cycles, with row i
/// receiving exactly mu_i points: the permutation character on tabloids.
inline long long tabloid_fixed_points(const std::vector<int>& mu, const std::vector<int>& cycles) {
  std::vector<int> room = mu;
  std::function<long long(std::size_t)> place = [&](std::size_t c) -> long long {
    if (c == cycles.size()) return 1;
    long long total = 0;
    for (auto& r : room)
      if (r >= cycles[c]) {
        r -= cycles[c];
        total += place(c + 1);
        r += cycles[c];
      }
    return total;
  };
  return place(0);
}

/// Semistandard tableaux of shape lambda and content mu.
inline long long kostka(const std::vector<int>& lambda, const std::vector<int>& mu) {
  std::vector<std::vector<int>> grid;
  for (int len : lambda) grid.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid[i].size(); ++j) cells.emplace_back(i, j);
  std::vector<int> left = mu;
  std::function<long long(std::size_t)> fill = [&](std::size_t k) -> long long {
    if (k == cells.size()) return 1;
    const auto [i, j] = cells[k];
    long long total = 0;
    for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (j > 0 && grid[i][j - 1] > v) continue;
      if (i > 0 && grid[i - 1][j] >= v) continue;
      grid[i][j] = v;
      --left[static_cast<std::size_t>(v - 1)];
      total += fill(k + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
    grid[i][j] = 0;
    return total;
  };
  return fill(0);
}

/// Character table from Young's rule: tabloid characters are
/// sum_lambda K(lambda, mu) ch^lambda with K unitriangular, solved from the
/// most dominant shape down. `shapes` must list [n] first in reverse-lex
/// order; classes are given as cycle-length lists.
inline std::vector<std::vector<long long>> young_rule_table(const std::vector<std::vector<int>>& shapes,
                                                            const std::vector<std::vector<int>>& classes) {
  std::vector<std::vector<long long>> table(shapes.size(), std::vector<long long>(classes.size(), 0));
  for (std::size_t m = 0; m < shapes.size(); ++m) {
    for (std::size_t c = 0; c < classes.size(); ++c) table[m][c] = tabloid_fixed_points(shapes[m], classes[c]);
    for (std::size_t l = 0; l < m; ++l) {
      const long long k = kostka(shapes[l], shapes[m]);
      for (std::size_t c = 0; c < classes.size(); ++c) table[m][c] -= k * table[l][c];
    }
  }
  return table;
}

/// All perfect matchings of {0..points-1} as involution image arrays.
inline std::vector<std::vector<int>> all_matchings(int points) {
  std::vector<std::vector<int>> out;
  std::vector<int> images(static_cast<std::size_t>(points), -1);
  std::function<void()> rec = [&]() {
    auto first = std::find(images.begin(), images.end(), -1);
    if (first == images.end()) {
      out.push_back(images);
      return;
    }
    const int a = static_cast<int>(first - images.begin());
    for (int b = a + 1; b < points; ++b) {
      if (images[static_cast<std::size_t>(b)] != -1) continue;
      images[static_cast<std::size_t>(a)] = b;
      images[static_cast<std::size_t>(b)] = a;
      rec();
      images[static_cast<std::size_t>(a)] = -1;
      images[static_cast<std::size_t>(b)] = -1;
    }
  };
  rec();
  return out;
}

/// Coefficients of x(x+1)...(x+m-1): unsigned Stirling numbers c(m, k).
inline std::vector<mpz_class> rising_factorial_coefficients(int m) {
  std::vector<mpz_class> poly{1};
  for (int i = 0; i < m; ++i) {
    std::vector<mpz_class> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] += poly[k] * i;
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace oracle
