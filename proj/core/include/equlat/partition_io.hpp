#pragma once

#include <string>
#include <string_view>

#include "equlat/partition.hpp"
#include "equlat/small_eq.hpp"

namespace equlat {

// Partition text format, one class per line, any order:
//
//   class: 0 1
//   class: 2 3
//
// Blank lines and `#` comments are ignored. Output is canonical: classes by
// least element, members ascending.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

// SmallEq adds `threshold: N` and `tail: <label>`; the classes cover
// {0..N-1} and `tail` names a member of the class merged with ↑N, or N.
SmallEq parse_small_eq(std::string_view text);
std::string format_small_eq(const SmallEq& e);

}  // namespace equlat
