#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace equlat {

using Predicate = std::function<bool(std::uint64_t)>;

bool is_prime(std::uint64_t n);

// Built-in predicate names: even, odd, prime, all, none.
Predicate named_predicate(const std::string& name);
std::vector<std::string> predicate_names();

// A finite characteristic vector read from text made of '0' and '1'
// characters (whitespace ignored). Querying past its end throws
// kInvalidArgument.
Predicate bitmask_predicate(const std::string& text);

}  // namespace equlat
