#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace equlat {

// Input alphabet of every automaton in the library: two bits and the
// separator □ (written `B` in text formats).
enum class Symbol : std::uint8_t { kZero = 0, kOne = 1, kBlank = 2 };

inline constexpr std::size_t kAlphabetSize = 3;
inline constexpr std::array<Symbol, kAlphabetSize> kAlphabet = {Symbol::kZero, Symbol::kOne, Symbol::kBlank};
inline constexpr std::array<Symbol, 2> kBits = {Symbol::kZero, Symbol::kOne};

using StateId = std::uint32_t;
using Word = std::vector<Symbol>;

char symbol_char(Symbol s);  // '0', '1', 'B'
Word word_from_string(std::string_view text);  // accepts 0, 1, B and □
std::string word_to_string(std::span<const Symbol> word);

// Complete deterministic automaton over {0, 1, □}.
class Dfa {
 public:
  // `transitions` is row-major: transitions[state * 3 + symbol]. Throws
  // kInvalidDfa on out-of-range targets, start or table size.
  Dfa(std::size_t state_count, StateId start, std::vector<StateId> transitions, std::vector<bool> accepting);

  std::size_t state_count() const noexcept { return accepting_.size(); }
  StateId start() const noexcept { return start_; }
  StateId next(StateId state, Symbol symbol) const {
    return transitions_[state * kAlphabetSize + static_cast<std::size_t>(symbol)];
  }
  bool accepting(StateId state) const { return accepting_[state]; }

  StateId run(StateId from, std::span<const Symbol> word) const;
  bool accepts(std::span<const Symbol> word) const { return accepting_[run(start_, word)]; }

  // Same tables, different initial state.
  Dfa with_start(StateId start) const;
  Dfa complement() const;

  std::vector<bool> reachable_from(StateId from) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  StateId start_;
  std::vector<StateId> transitions_;
  std::vector<bool> accepting_;
};

enum class Combine { kAnd, kOr, kXor, kAndNot };

// Reachable part of the synchronous product; state (p, q) accepts iff
// combine(accept_a(p), accept_b(q)).
Dfa product(const Dfa& a, const Dfa& b, Combine combine);

bool is_empty(const Dfa& d);

// Shortlex-least word accepted from `from` (symbols ordered 0 < 1 < □), or
// nothing when the language from that state is empty.
std::optional<Word> shortlex_least_word(const Dfa& d, StateId from);

// Language-equivalence classes of all states (Moore refinement); two states
// get the same id iff they accept the same language.
std::vector<std::uint32_t> state_language_classes(const Dfa& d);

// Minimal complete DFA, states numbered in breadth-first order from the start.
Dfa minimize(const Dfa& d);

bool equivalent(const Dfa& a, const Dfa& b);

// Non-deterministic automaton with ε-moves.
class Nfa {
 public:
  StateId add_state(bool accepting = false);
  void add_start(StateId s) { starts_.push_back(s); }
  void add_move(StateId from, Symbol symbol, StateId to);
  void add_epsilon(StateId from, StateId to);
  void set_accepting(StateId s, bool accepting) { accepting_[s] = accepting; }

  std::size_t state_count() const noexcept { return accepting_.size(); }
  std::span<const StateId> starts() const noexcept { return starts_; }
  bool accepting(StateId s) const { return accepting_[s]; }
  std::span<const StateId> moves(StateId from, Symbol symbol) const {
    return moves_[from][static_cast<std::size_t>(symbol)];
  }
  std::span<const StateId> epsilon(StateId from) const { return epsilon_[from]; }

 private:
  std::vector<StateId> starts_;
  std::vector<bool> accepting_;
  std::vector<std::array<std::vector<StateId>, kAlphabetSize>> moves_;
  std::vector<std::vector<StateId>> epsilon_;
};

// Subset construction over the reachable subsets (the empty subset becomes
// the dead state).
Dfa determinize(const Nfa& n);

}  // namespace equlat
