#pragma once

#include <optional>
#include <string>
#include <vector>

namespace equlat::cli {

// Exit statuses: 0 success (and, for checks, everything passed), 1 a check
// or verification failed, 2 bad usage or invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;

struct CommandResult {
  int exit_status = kExitOk;
  std::string report;                 // human-readable
  std::optional<std::string> output;  // same text format the loaders accept
};

// Runs `equlat <args...>` (args exclude the program name). Never throws.
// When `--out FILE` is given the output is written there and not returned.
CommandResult run(const std::vector<std::string>& args);

}  // namespace equlat::cli
