// Hook lengths relative to arbitrary box sets, slicings of a diagram into
// blocks, and the sliced hook products built from them.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "symwalk/bigint.hpp"
#include "symwalk/partition.hpp"

namespace symwalk {

/// A finite set of boxes, kept sorted and duplicate-free.
class GeneralBoxSet {
 public:
  GeneralBoxSet() = default;
  /// Throws std::invalid_argument on duplicates.
  explicit GeneralBoxSet(std::vector<Box> boxes);

  const std::vector<Box>& boxes() const { return boxes_; }
  std::size_t size() const { return boxes_.size(); }
  bool empty() const { return boxes_.empty(); }
  bool contains(Box u) const;

 private:
  std::vector<Box> boxes_;
};

enum class SliceKind { Lambda1, LambdaUp1, AbDelta, Custom };

struct SliceSpec {
  SliceKind kind = SliceKind::Lambda1;
  std::vector<GeneralBoxSet> blocks;  // Custom only

  static SliceSpec first_row() { return {SliceKind::Lambda1, {}}; }
  static SliceSpec first_hook() { return {SliceKind::LambdaUp1, {}}; }
  static SliceSpec ab_delta() { return {SliceKind::AbDelta, {}}; }
  static SliceSpec custom(std::vector<GeneralBoxSet> blocks) { return {SliceKind::Custom, std::move(blocks)}; }
  /// The one-block slicing {lambda}; sliced products reduce to plain ones.
  static SliceSpec whole(const Partition& lambda);
};

/// Boxes v of S in u's row with v.col >= u.col, or in u's column with
/// v.row >= u.row. u itself counts only when it lies in S.
int general_hook_length(const GeneralBoxSet& set, Box u);

/// The blocks of `spec` on `lambda`, empty blocks omitted. Custom blocks
/// are validated to be a set partition of lambda (std::invalid_argument).
std::vector<GeneralBoxSet> resolve_slicing(const Partition& lambda, const SliceSpec& spec);

/// Product over blocks nu of H(nu, nu cap E). Throws std::out_of_range if
/// a box of E lies outside lambda.
BigCount sliced_hook_product(const Partition& lambda, const SliceSpec& spec, std::span<const Box> boxes);
BigCount sliced_hook_product(const Partition& lambda, const SliceSpec& spec);

struct SliceRatio {
  std::optional<Rational> exact;  // dropped when either side exceeds the bit threshold
  LogReal log;
};

inline constexpr unsigned long kDefaultRatioBits = 4096;

/// H(lambda, mu) / H^{*P}(lambda, mu) for a subdiagram mu of lambda.
SliceRatio slice_ratio(const Partition& lambda, const Partition& mu, const SliceSpec& spec,
                       unsigned long exact_bits = kDefaultRatioBits);

}  // namespace symwalk
