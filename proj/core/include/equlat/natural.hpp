#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace equlat {

// Arbitrary-precision natural number. TM configuration codes grow
// exponentially with the tape length, so relations over codes need it.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(const Natural& n) { return n.str(); }

// Parses a decimal natural; throws kParse on anything else.
Natural parse_natural_text(const std::string& text);

bool fits_u64(const Natural& n);

}  // namespace equlat
