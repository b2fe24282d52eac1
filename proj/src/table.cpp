#include "symwalk/table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace symwalk {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string csv_field(const Cell& cell) {
  return std::visit(Overloaded{
                        [](std::monostate) { return std::string(); },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                        [](std::int64_t v) { return std::to_string(v); },
                        [](const BigCount& v) { return to_string(v); },
                        [](const Rational& v) { return to_string(v); },
                        [](double v) { return format_real(v); },
                        [](const std::string& s) { return s; },
                    },
                    cell);
}

Json json_value(const Cell& cell) {
  return std::visit(Overloaded{
                        [](std::monostate) { return Json(nullptr); },
                        [](bool b) { return Json(b); },
                        [](std::int64_t v) { return Json(v); },
                        [](const BigCount& v) {
                          if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
                          return Json(to_string(v));
                        },
                        [](const Rational& v) { return Json(to_string(v)); },
                        [](double v) {
                          if (!std::isfinite(v)) return Json(nullptr);
                          return Json(std::stod(format_real(v)));
                        },
                        [](const std::string& s) { return Json(s); },
                    },
                    cell);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, table has " +
                                std::to_string(columns_.size()) + " columns");
  rows_.push_back(std::move(row));
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns().size(); ++c) out << (c ? "," : "") << table.columns()[c];
  out << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table, const Json& inputs) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["inputs"] = inputs;
  Json rows = Json::array();
  for (const auto& row : table.rows()) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns()[c]] = json_value(row[c]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace symwalk
