// Sweep configs: `key = value` lines naming a subcommand and the grid of
// flag values to run it over.
//
//   subcommand = vdeg        # required
//   lambda = 3,2; 4,4; 2^5   # ';' separates values
//   n = 4..20                # inclusive integer range
//   alpha = 1, 2, 5          # ',' separates values, except for
//                            # lambda/class/faces, whose values use commas
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symwalk {

struct SweepAxis {
  std::string key;
  std::vector<std::string> values;
};

struct SweepPlan {
  std::string subcommand;
  std::vector<SweepAxis> axes;  // config order

  /// Cartesian product, last axis fastest. Each entry pairs axis keys
  /// with one chosen value each.
  std::vector<std::vector<std::pair<std::string, std::string>>> expand() const;
};

/// Throws std::invalid_argument with the offending line on bad input.
SweepPlan parse_sweep_config(std::string_view text);

}  // namespace symwalk
