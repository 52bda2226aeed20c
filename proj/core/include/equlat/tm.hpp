#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equlat/natural.hpp"

namespace equlat {

enum class Move : std::uint8_t { kLeft, kRight, kStay };

struct Rule {
  std::size_t next = 0;
  std::uint8_t write = 0;
  Move move = Move::kStay;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Deterministic single-tape machine on a left-bounded tape. Symbol 0 is the
// blank; the other symbols are kept in ascending character order. Rules are
// total on non-halting states and absent on halting ones.
class TmSpec {
 public:
  // `symbols[0]` is the blank. `rules` is row-major over (state, symbol).
  // Throws kInvalidMachine.
  static TmSpec make(std::vector<std::string> states, std::string symbols, std::size_t start,
                     std::vector<bool> halting, std::vector<std::optional<Rule>> rules);

  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t symbol_count() const noexcept { return symbols_.size(); }
  const std::string& state_name(std::size_t q) const { return states_.at(q); }
  char symbol(std::size_t a) const { return symbols_.at(a); }
  char blank() const noexcept { return symbols_[0]; }
  std::size_t start() const noexcept { return start_; }
  bool is_halting(std::size_t q) const { return halting_.at(q); }
  const std::optional<Rule>& rule(std::size_t q, std::size_t a) const { return rules_.at(q * symbols_.size() + a); }

  std::optional<std::size_t> state_index(std::string_view name) const;
  std::optional<std::uint8_t> symbol_index(char c) const;

  friend bool operator==(const TmSpec&, const TmSpec&) = default;

 private:
  TmSpec() = default;

  std::vector<std::string> states_;
  std::string symbols_;
  std::size_t start_ = 0;
  std::vector<bool> halting_;
  std::vector<std::optional<Rule>> rules_;
};

// Text format: `states:`, `start:`, `halt:`, `blank:`, optional `symbols:`,
// then `rule: q a -> q' b M` with M one of L, R, S. Throws kParse, or
// kInvalidMachine for well-formed text describing a bad machine.
TmSpec parse_tm(std::string_view text);
// Canonical text: rules ordered by state then symbol index.
std::string format_tm(const TmSpec& m);

// Instantaneous description. The tape holds cells 0.. with trailing blanks
// trimmed; the head may sit beyond its end.
struct Configuration {
  std::size_t state = 0;
  std::size_t head = 0;
  std::vector<std::uint8_t> tape;

  std::uint8_t cell(std::size_t i) const { return i < tape.size() ? tape[i] : 0; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Start state, head on cell 0, `input` written from cell 0. Throws
// kInvalidArgument on characters outside the alphabet.
Configuration initial_configuration(const TmSpec& m, std::string_view input);

bool is_final(const TmSpec& m, const Configuration& c);

// The successor, or nothing when c is halted. Moving left on cell 0 keeps
// the head on cell 0.
std::optional<Configuration> step(const TmSpec& m, const Configuration& c);

// Every configuration whose successor is c.
std::vector<Configuration> predecessors(const TmSpec& m, const Configuration& c);

// Tape contents as symbol characters, trailing blanks trimmed.
std::string tape_string(const TmSpec& m, const Configuration& c);
std::string describe(const TmSpec& m, const Configuration& c);

struct SimulationResult {
  bool halted = false;
  std::size_t steps = 0;  // steps taken; the halt step when halted
  Configuration last;
};

SimulationResult simulate(const TmSpec& m, Configuration c, std::size_t max_steps);

// --- Encodings ------------------------------------------------------------
//
// A configuration with head h is the word
//     cell 0 .. cell h-1, [state q], cell h .. cell e
// over the digits 0..Γ-1 (symbols) and Γ+q (states). Cell h is always
// written; cells after it run to the last non-blank. The word is read as a
// bijective base-(Γ+S) numeral with digit value index+1, so codes are
// naturals ≥ 1 and every word has exactly one code.

Natural encode_configuration(const TmSpec& m, const Configuration& c);
// Nothing for naturals that are not the code of a configuration.
std::optional<Configuration> decode_configuration(const TmSpec& m, const Natural& code);

// The canonical text format_tm(m) read as a bijective base-256 numeral
// (digit = byte + 1). Decoding accepts only codes whose text parses and
// re-formats to itself.
Natural machine_code(const TmSpec& m);
std::optional<TmSpec> decode_machine(const Natural& code);

}  // namespace equlat
