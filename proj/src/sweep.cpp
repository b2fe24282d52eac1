#include "symwalk/sweep.hpp"

#include <charconv>
#include <stdexcept>

namespace symwalk {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s = s.substr(pos + 1);
  }
  return out;
}

bool parse_int(const std::string& s, long long& value) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool multiset_valued(const std::string& key) { return key == "lambda" || key == "class" || key == "faces" || key == "mu"; }

std::vector<std::string> parse_values(const std::string& key, const std::string& raw, const std::string& line) {
  std::vector<std::string> values;
  if (raw.find(';') != std::string::npos) {
    values = split(raw, ';');
  } else if (const auto dots = raw.find(".."); dots != std::string::npos) {
    long long lo = 0, hi = 0;
    if (!parse_int(trim(raw.substr(0, dots)), lo) || !parse_int(trim(raw.substr(dots + 2)), hi) || lo > hi)
      throw std::invalid_argument("bad range in sweep config line: " + line);
    if (hi - lo > 1'000'000) throw std::invalid_argument("range too long in sweep config line: " + line);
    for (long long v = lo; v <= hi; ++v) values.push_back(std::to_string(v));
  } else if (multiset_valued(key)) {
    values = {raw};
  } else {
    values = split(raw, ',');
  }
  for (const auto& v : values)
    if (v.empty()) throw std::invalid_argument("empty value in sweep config line: " + line);
  return values;
}

}  // namespace

SweepPlan parse_sweep_config(std::string_view text) {
  SweepPlan plan;
  for (const auto& raw_line : split(text, '\n')) {
    const std::string line = trim(raw_line.substr(0, raw_line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key = value in sweep config line: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string raw = trim(line.substr(eq + 1));
    if (key.empty() || raw.empty()) throw std::invalid_argument("empty key or value in sweep config line: " + line);
    if (key == "subcommand") {
      plan.subcommand = raw;
      continue;
    }
    for (const auto& axis : plan.axes)
      if (axis.key == key) throw std::invalid_argument("duplicate key in sweep config: " + key);
    plan.axes.push_back({key, parse_values(key, raw, line)});
  }
  if (plan.subcommand.empty()) throw std::invalid_argument("sweep config lacks a subcommand line");
  if (plan.subcommand == "sweep") throw std::invalid_argument("sweeps cannot nest");
  return plan;
}

std::vector<std::vector<std::pair<std::string, std::string>>> SweepPlan::expand() const {
  std::vector<std::vector<std::pair<std::string, std::string>>> out{{}};
  for (const auto& axis : axes) {
    std::vector<std::vector<std::pair<std::string, std::string>>> next;
    for (const auto& prefix : out)
      for (const auto& value : axis.values) {
        auto combo = prefix;
        combo.emplace_back(axis.key, value);
        next.push_back(std::move(combo));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace symwalk
