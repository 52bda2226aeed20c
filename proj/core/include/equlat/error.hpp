#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equlat {

enum class ErrorKind {
  kInvalidUniverse,
  kInvalidPartition,
  kUniverseMismatch,
  kNotSingular,
  kParse,
  kInvalidDfa,
  kNotEquivalence,
  kInvalidMachine,
  kInvalidArgument,
  kOverflow,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception; `kind()` lets
// callers (and the CLI exit-code mapping) distinguish them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace equlat
