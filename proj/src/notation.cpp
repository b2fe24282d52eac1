#include "symwalk/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>

namespace symwalk {

namespace {

int parse_positive(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("empty number in '" + std::string(whole) + "'");
  int value = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError("malformed number '" + std::string(digits) + "' in '" + std::string(whole) + "'");
  if (value <= 0)
    throw ParseError("lengths and multiplicities must be positive in '" + std::string(whole) + "'");
  return value;
}

}  // namespace

std::vector<int> parse_multiset(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw ParseError("empty term list");

  std::vector<int> out;
  std::string_view rest(compact);
  while (true) {
    const auto comma = rest.find(',');
    const auto term = rest.substr(0, comma);
    if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
    const auto caret = term.find('^');
    const int length = parse_positive(term.substr(0, caret), text);
    int count = 1;
    if (caret != std::string_view::npos) count = parse_positive(term.substr(caret + 1), text);
    if (static_cast<long long>(out.size()) + count > 100'000'000)
      throw ParseError("term list too large in '" + std::string(text) + "'");
    out.insert(out.end(), static_cast<std::size_t>(count), length);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string format_multiset(const std::vector<int>& parts, char separator) {
  std::string out;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += separator;
    out += std::to_string(parts[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace symwalk
