#pragma once

#include <string>
#include <string_view>

#include "equlat/decider.hpp"

namespace equlat::cli {

// Decider expressions:
//
//   expr := bottom | top | parity
//         | singular(PRED)          PRED in even, odd, prime, all, none
//         | meet(expr, expr)
//         | complement(expr)
//         | partition(FILE)         singletons outside the file's universe
//         | nonhalt(N)              over machine codes
//         | approx-even(MACHINE) | approx-odd(MACHINE)
//
// MACHINE is a zoo name or a .tm path. Whitespace is ignored.
DeciderEq parse_decider(std::string_view text);

std::string decider_grammar();

}  // namespace equlat::cli
