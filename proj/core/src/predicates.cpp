#include "equlat/predicates.hpp"

#include <cctype>
#include <limits>
#include <memory>

#include "equlat/error.hpp"
#include "equlat/natural.hpp"

namespace equlat {

Natural parse_natural_text(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::kParse, "expected a decimal natural, got `" + text + "`");
  }
  return Natural(text);
}

bool fits_u64(const Natural& n) { return n >= 0 && n <= std::numeric_limits<std::uint64_t>::max(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Predicate named_predicate(const std::string& name) {
  if (name == "even") return [](std::uint64_t n) { return n % 2 == 0; };
  if (name == "odd") return [](std::uint64_t n) { return n % 2 == 1; };
  if (name == "prime") return is_prime;
  if (name == "all") return [](std::uint64_t) { return true; };
  if (name == "none") return [](std::uint64_t) { return false; };
  throw Error(ErrorKind::kInvalidArgument, "unknown predicate `" + name + "`");
}

std::vector<std::string> predicate_names() { return {"even", "odd", "prime", "all", "none"}; }

Predicate bitmask_predicate(const std::string& text) {
  auto bits = std::make_shared<std::vector<bool>>();
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      bits->push_back(ch == '1');
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw Error(ErrorKind::kParse, std::string("bitmask: unexpected character `") + ch + "`");
    }
  }
  return [bits](std::uint64_t n) {
    if (n >= bits->size()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "bitmask predicate is defined on [0, " + std::to_string(bits->size()) + ") only");
    }
    return static_cast<bool>((*bits)[n]);
  };
}

}  // namespace equlat
