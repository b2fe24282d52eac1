#include "symwalk/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "symwalk/notation.hpp"

namespace symwalk {

namespace {

Anatomy build_anatomy(const std::vector<int>& rows, int n) {
  Anatomy a;
  a.rows = rows;
  if (!rows.empty()) {
    a.columns.assign(static_cast<std::size_t>(rows[0]), 0);
    for (int len : rows)
      for (int j = 0; j < len; ++j) ++a.columns[static_cast<std::size_t>(j)];
  }
  while (a.durfee < static_cast<int>(rows.size()) && rows[static_cast<std::size_t>(a.durfee)] >= a.durfee + 1)
    ++a.durfee;
  for (int i = 1; i <= a.durfee; ++i) {
    const int arm = rows[static_cast<std::size_t>(i - 1)] - i;
    const int leg = a.columns[static_cast<std::size_t>(i - 1)] - i;
    a.arms.push_back(arm);
    a.legs.push_back(leg);
    a.diagonal_hooks.push_back(arm + leg + 1);
  }
  a.external_hook = a.diagonal_hooks.empty() ? 0 : a.diagonal_hooks[0];
  a.center = n - a.external_hook;
  for (int col : a.columns) a.above_first_row.push_back(col - 1);
  return a;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
  anatomy_ = build_anatomy(parts_, size_);
}

Partition Partition::parse(std::string_view text) { return Partition(parse_multiset(text)); }

int Partition::row(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::column(int j) const {
  if (j < 1 || j > static_cast<int>(anatomy_.columns.size())) return 0;
  return anatomy_.columns[static_cast<std::size_t>(j - 1)];
}

bool Partition::contains(Box box) const { return box.row >= 1 && box.col >= 1 && box.col <= row(box.row); }

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i)
    if (other.row(i) > row(i)) return false;
  return true;
}

Partition Partition::center() const {
  std::vector<int> inner;
  for (int i = 2; i <= length(); ++i) {
    if (row(i) < 2) break;
    inner.push_back(row(i) - 1);
  }
  return Partition(std::move(inner));
}

Partition Partition::external_hook() const {
  if (empty()) return {};
  std::vector<int> hook{row(1)};
  hook.insert(hook.end(), static_cast<std::size_t>(column(1) - 1), 1);
  return Partition(std::move(hook));
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= row(i); ++j) out.push_back({i, j});
  return out;
}

std::string Partition::to_string() const {
  if (empty()) return "empty";
  return format_multiset(parts_, '+');
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0) throw std::invalid_argument("partitions: n must be nonnegative");
  if (n == 0) {
    visit({});
    return;
  }
  // Successor in reverse-lex order: strip trailing ones, decrement the last
  // larger part, refill greedily.
  std::vector<int> cur{n};
  while (true) {
    visit(cur);
    int ones = 0;
    while (!cur.empty() && cur.back() == 1) {
      cur.pop_back();
      ++ones;
    }
    if (cur.empty()) return;
    const int part = --cur.back();
    int rest = ones + 1;
    while (rest > 0) {
      const int take = std::min(part, rest);
      cur.push_back(take);
      rest -= take;
    }
  }
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
  return out;
}

std::vector<Partition> enumerate_subdiagrams(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i, int cap) -> void {
    if (!cur.empty()) out.emplace_back(cur);
    if (i > outer.length()) return;
    for (int len = std::min(cap, outer.row(i)); len >= 1; --len) {
      cur.push_back(len);
      self(self, i + 1, len);
      cur.pop_back();
    }
  };
  rec(rec, 1, outer.empty() ? 0 : outer.row(1));
  return out;
}

Partition conjugate(const Partition& lambda) { return Partition(lambda.anatomy().columns); }

const Anatomy& anatomy(const Partition& lambda) { return lambda.anatomy(); }

int hook_length(const Partition& lambda, Box u) {
  if (!lambda.contains(u)) throw std::out_of_range("hook_length: box outside the diagram");
  return (lambda.row(u.row) - u.col) + (lambda.column(u.col) - u.row) + 1;
}

BigCount hook_product(const Partition& lambda, std::span<const Box> boxes) {
  BigCount out = 1;
  for (const Box& u : boxes) out *= hook_length(lambda, u);
  return out;
}

BigCount hook_product(const Partition& lambda) {
  const auto all = lambda.boxes();
  return hook_product(lambda, all);
}

}  // namespace symwalk
