#include "symwalk/slicing.hpp"

#include <algorithm>
#include <stdexcept>

namespace symwalk {

GeneralBoxSet::GeneralBoxSet(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
  std::sort(boxes_.begin(), boxes_.end());
  if (std::adjacent_find(boxes_.begin(), boxes_.end()) != boxes_.end())
    throw std::invalid_argument("box set contains duplicates");
}

bool GeneralBoxSet::contains(Box u) const { return std::binary_search(boxes_.begin(), boxes_.end(), u); }

SliceSpec SliceSpec::whole(const Partition& lambda) {
  return custom({GeneralBoxSet(lambda.boxes())});
}

int general_hook_length(const GeneralBoxSet& set, Box u) {
  int count = 0;
  for (const Box& v : set.boxes())
    if ((v.row == u.row && v.col >= u.col) || (v.col == u.col && v.row >= u.row)) ++count;
  return count;
}

std::vector<GeneralBoxSet> resolve_slicing(const Partition& lambda, const SliceSpec& spec) {
  std::vector<std::vector<Box>> raw;
  switch (spec.kind) {
    case SliceKind::Lambda1: {
      std::vector<Box> top, rest;
      for (const Box& u : lambda.boxes()) (u.row == 1 ? top : rest).push_back(u);
      raw = {std::move(top), std::move(rest)};
      break;
    }
    case SliceKind::LambdaUp1: {
      std::vector<Box> hook, rest;
      for (const Box& u : lambda.boxes()) (u.row == 1 || u.col == 1 ? hook : rest).push_back(u);
      raw = {std::move(hook), std::move(rest)};
      break;
    }
    case SliceKind::AbDelta: {
      const int durfee = lambda.anatomy().durfee;
      for (int i = 1; i <= durfee; ++i) {
        std::vector<Box> arm, leg;
        for (int j = i + 1; j <= lambda.row(i); ++j) arm.push_back({i, j});
        for (int r = i + 1; r <= lambda.column(i); ++r) leg.push_back({r, i});
        raw.push_back(std::move(arm));
        raw.push_back(std::move(leg));
        raw.push_back({{i, i}});
      }
      break;
    }
    case SliceKind::Custom: {
      std::vector<Box> seen;
      for (const auto& block : spec.blocks) {
        if (block.empty()) throw std::invalid_argument("slicing blocks must be nonempty");
        for (const Box& u : block.boxes()) {
          if (!lambda.contains(u)) throw std::invalid_argument("slicing block leaves the diagram");
          seen.push_back(u);
        }
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("slicing blocks overlap");
      if (static_cast<int>(seen.size()) != lambda.size())
        throw std::invalid_argument("slicing blocks do not cover the diagram");
      return spec.blocks;
    }
  }
  std::vector<GeneralBoxSet> out;
  for (auto& block : raw)
    if (!block.empty()) out.emplace_back(std::move(block));
  return out;
}

BigCount sliced_hook_product(const Partition& lambda, const SliceSpec& spec, std::span<const Box> boxes) {
  for (const Box& u : boxes)
    if (!lambda.contains(u)) throw std::out_of_range("sliced_hook_product: box outside the diagram");
  const auto blocks = resolve_slicing(lambda, spec);
  BigCount out = 1;
  for (const Box& u : boxes) {
    const auto owner = std::find_if(blocks.begin(), blocks.end(), [&](const GeneralBoxSet& b) { return b.contains(u); });
    out *= general_hook_length(*owner, u);
  }
  return out;
}

BigCount sliced_hook_product(const Partition& lambda, const SliceSpec& spec) {
  const auto all = lambda.boxes();
  return sliced_hook_product(lambda, spec, all);
}

SliceRatio slice_ratio(const Partition& lambda, const Partition& mu, const SliceSpec& spec, unsigned long exact_bits) {
  if (!lambda.contains(mu)) throw std::domain_error("slice_ratio: mu is not contained in lambda");
  const auto boxes = mu.boxes();
  const BigCount plain = hook_product(lambda, boxes);
  const BigCount sliced = sliced_hook_product(lambda, spec, boxes);
  SliceRatio out;
  out.log = LogReal::from_log(log_abs(plain) - log_abs(sliced));
  if (mpz_sizeinbase(plain.get_mpz_t(), 2) <= exact_bits && mpz_sizeinbase(sliced.get_mpz_t(), 2) <= exact_bits) {
    Rational exact(plain, sliced);
    exact.canonicalize();
    out.exact = std::move(exact);
  }
  return out;
}

}  // namespace symwalk
