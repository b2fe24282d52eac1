// Integer partitions, Young-diagram anatomy and hook lengths.
//
// Boxes are addressed (row, col), 1-based; row 1 is the first (longest)
// row. The hook of a box is the box itself, the boxes to its right in its
// row and the boxes in later rows of its column.
#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symwalk/bigint.hpp"

namespace symwalk {

struct Box {
  int row = 1;
  int col = 1;
  auto operator<=>(const Box&) const = default;
};

/// Derived measurements of a diagram. Per-diagonal vectors have length
/// `durfee`; `columns` and `above_first_row` have length `rows[0]`.
struct Anatomy {
  std::vector<int> rows;             // lambda_i
  std::vector<int> columns;          // lambda'_j
  int durfee = 0;                    // delta, the diagonal length
  std::vector<int> arms;             // a_i = lambda_i - i
  std::vector<int> legs;             // b_i = lambda'_i - i
  std::vector<int> diagonal_hooks;   // s_i = a_i + b_i + 1
  int external_hook = 0;             // s = s_1 (0 for the empty diagram)
  int center = 0;                    // c = n - s
  std::vector<int> above_first_row;  // u_j = lambda'_j - 1
};

class Partition {
 public:
  /// The empty partition (n = 0), only meaningful as a hook center.
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);
  /// Comma/power grammar, e.g. "14,4,3,2,2,1" or "2^5".
  static Partition parse(std::string_view text);

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  /// lambda_i, 1-based; 0 past the last row.
  int row(int i) const;
  /// lambda'_j, 1-based; 0 past the last column.
  int column(int j) const;
  bool contains(Box box) const;
  /// True when every box of `other` is a box of this diagram.
  bool contains(const Partition& other) const;
  const Anatomy& anatomy() const { return anatomy_; }

  /// The center lambda_{>=2,>=2} shifted to the origin.
  Partition center() const;
  /// The external hook as a diagram [a_1 + 1, 1^{b_1}].
  Partition external_hook() const;
  /// All boxes, row by row.
  std::vector<Box> boxes() const;

  /// Table rendering: "3+2", "2^5", "empty".
  std::string to_string() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
  Anatomy anatomy_;
};

/// Every partition of n, reverse-lexicographic from [n]. n = 0 yields the
/// single empty partition.
std::vector<Partition> enumerate_partitions(int n);
/// Same order, streaming raw parts without building Partition objects.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit);

/// Every nonempty partition whose diagram fits inside `outer`.
std::vector<Partition> enumerate_subdiagrams(const Partition& outer);

Partition conjugate(const Partition& lambda);
const Anatomy& anatomy(const Partition& lambda);

/// H(lambda, u). Throws std::out_of_range when u is not a box of lambda.
int hook_length(const Partition& lambda, Box u);
/// H(lambda, E): exact product over E. Every box must lie in lambda.
BigCount hook_product(const Partition& lambda, std::span<const Box> boxes);
/// H(lambda, lambda).
BigCount hook_product(const Partition& lambda);

}  // namespace symwalk
