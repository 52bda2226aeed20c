#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace equlat::detail {

// One `key: value...` line of a text format, with its 1-based line number.
struct KeyedLine {
  std::size_t number = 0;
  std::string key;
  std::vector<std::string> values;
};

// Splits `text` into keyed lines. Blank lines and `#` comments are skipped;
// a non-blank line without a colon is a parse error.
std::vector<KeyedLine> read_keyed_lines(std::string_view text, std::string_view format_name);

[[noreturn]] void parse_fail(std::string_view format_name, std::size_t line, const std::string& message);

std::uint64_t parse_natural(std::string_view token, std::string_view format_name, std::size_t line);

}  // namespace equlat::detail
