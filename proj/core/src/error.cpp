#include "equlat/error.hpp"

namespace equlat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidUniverse: return "invalid-universe";
    case ErrorKind::kInvalidPartition: return "invalid-partition";
    case ErrorKind::kUniverseMismatch: return "universe-mismatch";
    case ErrorKind::kNotSingular: return "not-singular";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kInvalidDfa: return "invalid-dfa";
    case ErrorKind::kNotEquivalence: return "not-equivalence";
    case ErrorKind::kInvalidMachine: return "invalid-machine";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kOverflow: return "overflow";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace equlat
