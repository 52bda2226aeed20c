#pragma once

#include <string>

namespace equlat {

// Whole-file helpers used by every loader; failures raise kParse errors
// naming the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace equlat
