// Column tables and their CSV / JSON renderings.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "symwalk/bigint.hpp"

namespace symwalk {

using Json = nlohmann::ordered_json;

/// Empty cells render as an empty CSV field and JSON null.
using Cell = std::variant<std::monostate, bool, std::int64_t, BigCount, Rational, double, std::string>;

class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  /// Throws std::invalid_argument when the width differs from the header.
  void add_row(std::vector<Cell> row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Reals are rounded to 12 significant digits in both formats.
std::string format_real(double value);

void write_csv(std::ostream& out, const Table& table);
/// {"schema_version", "inputs", "rows"}; rows are objects keyed by column.
void write_json(std::ostream& out, const Table& table, const Json& inputs);

inline constexpr int kSchemaVersion = 1;

}  // namespace symwalk
