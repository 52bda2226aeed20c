#include "equlat/partition_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "equlat/error.hpp"
#include "equlat/text_io.hpp"
#include "line_reader.hpp"

namespace equlat {
namespace detail {

void parse_fail(std::string_view format_name, std::size_t line, const std::string& message) {
  throw Error(ErrorKind::kParse, std::string(format_name) + " line " + std::to_string(line) + ": " + message);
}

std::vector<KeyedLine> read_keyed_lines(std::string_view text, std::string_view format_name) {
  std::vector<KeyedLine> lines;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = raw.find(':');
    if (colon == std::string::npos) parse_fail(format_name, number, "expected `key: values`");
    KeyedLine line;
    line.number = number;
    std::istringstream key_in(raw.substr(0, colon));
    std::string extra;
    if (!(key_in >> line.key) || (key_in >> extra)) parse_fail(format_name, number, "malformed key");
    std::istringstream values_in(raw.substr(colon + 1));
    for (std::string v; values_in >> v;) line.values.push_back(v);
    lines.push_back(std::move(line));
  }
  return lines;
}

std::uint64_t parse_natural(std::string_view token, std::string_view format_name, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    parse_fail(format_name, line, "expected a decimal natural, got `" + std::string(token) + "`");
  }
  return value;
}

}  // namespace detail

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kParse, "cannot write " + path);
  out << contents;
}

namespace {

constexpr std::string_view kPartitionFormat = "partition";
constexpr std::string_view kSmallEqFormat = "small-eq";

std::vector<Element> parse_members(const detail::KeyedLine& line, std::string_view format) {
  if (line.values.empty()) detail::parse_fail(format, line.number, "class without elements");
  std::vector<Element> members;
  for (const auto& v : line.values) members.push_back(detail::parse_natural(v, format, line.number));
  return members;
}

void append_classes(std::ostringstream& out, const std::vector<std::vector<Element>>& classes) {
  for (const auto& cls : classes) {
    out << "class:";
    for (Element x : cls) out << ' ' << x;
    out << '\n';
  }
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::vector<std::vector<Element>> classes;
  for (const auto& line : detail::read_keyed_lines(text, kPartitionFormat)) {
    if (line.key != "class") detail::parse_fail(kPartitionFormat, line.number, "unknown key `" + line.key + "`");
    classes.push_back(parse_members(line, kPartitionFormat));
  }
  if (classes.empty()) throw Error(ErrorKind::kParse, "partition: no classes");
  return Partition::from_classes(classes);
}

std::string format_partition(const Partition& p) {
  std::ostringstream out;
  append_classes(out, p.classes());
  return out.str();
}

SmallEq parse_small_eq(std::string_view text) {
  std::optional<std::uint64_t> threshold;
  std::optional<std::uint64_t> tail;
  std::vector<std::vector<Element>> classes;
  for (const auto& line : detail::read_keyed_lines(text, kSmallEqFormat)) {
    if (line.key == "class") {
      classes.push_back(parse_members(line, kSmallEqFormat));
    } else if (line.key == "threshold" || line.key == "tail") {
      if (line.values.size() != 1) detail::parse_fail(kSmallEqFormat, line.number, "expected one value");
      auto& slot = line.key == "threshold" ? threshold : tail;
      if (slot) detail::parse_fail(kSmallEqFormat, line.number, "duplicate `" + line.key + "`");
      slot = detail::parse_natural(line.values[0], kSmallEqFormat, line.number);
    } else {
      detail::parse_fail(kSmallEqFormat, line.number, "unknown key `" + line.key + "`");
    }
  }
  if (!threshold) throw Error(ErrorKind::kParse, "small-eq: missing `threshold`");
  if (!tail) throw Error(ErrorKind::kParse, "small-eq: missing `tail`");
  return SmallEq::from_classes(*threshold, classes, *tail);
}

std::string format_small_eq(const SmallEq& e) {
  std::ostringstream out;
  out << "threshold: " << e.threshold() << '\n';
  append_classes(out, e.head_classes());
  out << "tail: " << e.tail_label() << '\n';
  return out.str();
}

}  // namespace equlat
