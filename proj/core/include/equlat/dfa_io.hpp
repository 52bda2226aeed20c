#pragma once

#include <string>
#include <string_view>

#include "equlat/dfa.hpp"

namespace equlat {

// DFA text format:
//
//   states: 3
//   start: 0
//   accept: 2
//   trans: 0 0 1
//   trans: 0 B 2
//   ...
//
// Symbols are 0, 1 and B (the separator □). Every (state, symbol) pair must
// have exactly one `trans` line.
Dfa parse_dfa(std::string_view text);
std::string format_dfa(const Dfa& d);

}  // namespace equlat
