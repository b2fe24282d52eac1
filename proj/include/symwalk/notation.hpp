// Text grammar shared by partitions and cycle types:
//   terms separated by commas, each `L` or `L^M`, whitespace ignored.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symwalk {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Expands "3^2,1" into {3,3,1}, sorted weakly decreasing.
std::vector<int> parse_multiset(std::string_view text);

/// Compact inverse of parse_multiset: {3,3,1} -> "3^2,1". Tables use '+'
/// as the separator so that fields stay comma-free.
std::string format_multiset(const std::vector<int>& parts_decreasing, char separator = ',');

}  // namespace symwalk
