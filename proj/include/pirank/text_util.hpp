#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "pirank/error.hpp"

// Small helpers shared by the line-oriented text formats.
namespace pirank::text {

[[noreturn]] inline void malformed(int line_number, const std::string& message) {
  fail(ErrorKind::malformed_input, "line " + std::to_string(line_number) + ": " + message);
}

inline std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long integer(std::string_view token, int line_number) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    malformed(line_number, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

// Calls f(line, number) for each line with comments stripped and blank lines skipped.
template <class F>
void for_each_line(std::string_view input, F&& f) {
  int number = 0;
  std::size_t start = 0;
  while (start <= input.size()) {
    std::size_t end = input.find('\n', start);
    if (end == std::string_view::npos) end = input.size();
    std::string_view line = input.substr(start, end - start);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!split(line).empty()) f(line, number);
    if (end == input.size()) break;
    start = end + 1;
  }
}

}  // namespace pirank::text
