#include "equlat/dfa.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <string>
#include <tuple>

#include "equlat/error.hpp"

namespace equlat {

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::kZero: return '0';
    case Symbol::kOne: return '1';
    case Symbol::kBlank: return 'B';
  }
  return '?';
}

Word word_from_string(std::string_view text) {
  static constexpr std::string_view kBox = "□";
  Word word;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '0') {
      word.push_back(Symbol::kZero);
    } else if (text[i] == '1') {
      word.push_back(Symbol::kOne);
    } else if (text[i] == 'B') {
      word.push_back(Symbol::kBlank);
    } else if (text.substr(i, kBox.size()) == kBox) {
      word.push_back(Symbol::kBlank);
      i += kBox.size() - 1;
    } else {
      throw Error(ErrorKind::kInvalidArgument, "unexpected character in word: " + std::string(text));
    }
  }
  return word;
}

std::string word_to_string(std::span<const Symbol> word) {
  std::string out;
  for (Symbol s : word) out.push_back(symbol_char(s));
  return out;
}

Dfa::Dfa(std::size_t state_count, StateId start, std::vector<StateId> transitions, std::vector<bool> accepting)
    : start_(start), transitions_(std::move(transitions)), accepting_(std::move(accepting)) {
  if (state_count == 0) throw Error(ErrorKind::kInvalidDfa, "automaton needs at least one state");
  if (state_count > std::numeric_limits<StateId>::max()) throw Error(ErrorKind::kInvalidDfa, "too many states");
  if (accepting_.size() != state_count) throw Error(ErrorKind::kInvalidDfa, "accepting table size mismatch");
  if (transitions_.size() != state_count * kAlphabetSize) {
    throw Error(ErrorKind::kInvalidDfa, "transition table is not total");
  }
  if (start_ >= state_count) throw Error(ErrorKind::kInvalidDfa, "start state out of range");
  for (StateId target : transitions_) {
    if (target >= state_count) throw Error(ErrorKind::kInvalidDfa, "transition target out of range");
  }
}

StateId Dfa::run(StateId from, std::span<const Symbol> word) const {
  StateId state = from;
  for (Symbol s : word) state = next(state, s);
  return state;
}

Dfa Dfa::with_start(StateId start) const {
  return Dfa(state_count(), start, transitions_, accepting_);
}

Dfa Dfa::complement() const {
  std::vector<bool> flipped(accepting_.size());
  for (std::size_t q = 0; q < accepting_.size(); ++q) flipped[q] = !accepting_[q];
  return Dfa(state_count(), start_, transitions_, std::move(flipped));
}

std::vector<bool> Dfa::reachable_from(StateId from) const {
  std::vector<bool> seen(state_count(), false);
  std::vector<StateId> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (Symbol s : kAlphabet) {
      const StateId t = next(q, s);
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

namespace {

bool combine_bits(Combine combine, bool a, bool b) {
  switch (combine) {
    case Combine::kAnd: return a && b;
    case Combine::kOr: return a || b;
    case Combine::kXor: return a != b;
    case Combine::kAndNot: return a && !b;
  }
  return false;
}

}  // namespace

Dfa product(const Dfa& a, const Dfa& b, Combine combine) {
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  auto intern = [&](StateId p, StateId q) {
    auto [it, inserted] = ids.try_emplace({p, q}, static_cast<StateId>(pairs.size()));
    if (inserted) pairs.emplace_back(p, q);
    return it->second;
  };
  intern(a.start(), b.start());
  std::vector<StateId> transitions;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    for (Symbol s : kAlphabet) transitions.push_back(intern(a.next(p, s), b.next(q, s)));
  }
  std::vector<bool> accepting(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    accepting[i] = combine_bits(combine, a.accepting(pairs[i].first), b.accepting(pairs[i].second));
  }
  return Dfa(pairs.size(), 0, std::move(transitions), std::move(accepting));
}

bool is_empty(const Dfa& d) {
  const auto seen = d.reachable_from(d.start());
  for (StateId q = 0; q < d.state_count(); ++q) {
    if (seen[q] && d.accepting(q)) return false;
  }
  return true;
}

std::optional<Word> shortlex_least_word(const Dfa& d, StateId from) {
  constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();
  const std::size_t n = d.state_count();
  std::vector<std::vector<StateId>> reverse(n);
  for (StateId q = 0; q < n; ++q) {
    for (Symbol s : kAlphabet) reverse[d.next(q, s)].push_back(q);
  }
  std::vector<std::size_t> distance(n, kInfinity);
  std::deque<StateId> queue;
  for (StateId q = 0; q < n; ++q) {
    if (d.accepting(q)) {
      distance[q] = 0;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    for (StateId p : reverse[q]) {
      if (distance[p] == kInfinity) {
        distance[p] = distance[q] + 1;
        queue.push_back(p);
      }
    }
  }
  if (distance[from] == kInfinity) return std::nullopt;
  Word word;
  StateId q = from;
  while (distance[q] > 0) {
    for (Symbol s : kAlphabet) {
      const StateId t = d.next(q, s);
      if (distance[t] == distance[q] - 1) {
        word.push_back(s);
        q = t;
        break;
      }
    }
  }
  return word;
}

std::vector<std::uint32_t> state_language_classes(const Dfa& d) {
  const std::size_t n = d.state_count();
  std::vector<std::uint32_t> cls(n);
  for (StateId q = 0; q < n; ++q) cls[q] = d.accepting(q) ? 1 : 0;
  std::size_t count = 0;
  while (true) {
    std::map<std::array<std::uint32_t, kAlphabetSize + 1>, std::uint32_t> signatures;
    std::vector<std::uint32_t> refined(n);
    for (StateId q = 0; q < n; ++q) {
      const std::array<std::uint32_t, kAlphabetSize + 1> sig = {
          cls[q], cls[d.next(q, Symbol::kZero)], cls[d.next(q, Symbol::kOne)], cls[d.next(q, Symbol::kBlank)]};
      refined[q] = signatures.try_emplace(sig, static_cast<std::uint32_t>(signatures.size())).first->second;
    }
    cls = std::move(refined);
    if (signatures.size() == count) return cls;
    count = signatures.size();
  }
}

Dfa minimize(const Dfa& d) {
  const auto cls = state_language_classes(d);
  // Breadth-first renumbering of classes reachable from the start.
  std::map<std::uint32_t, StateId> number;
  std::vector<StateId> representative;
  number.emplace(cls[d.start()], 0);
  representative.push_back(d.start());
  std::vector<StateId> transitions;
  for (std::size_t i = 0; i < representative.size(); ++i) {
    const StateId q = representative[i];
    for (Symbol s : kAlphabet) {
      const StateId t = d.next(q, s);
      auto [it, inserted] = number.try_emplace(cls[t], static_cast<StateId>(representative.size()));
      if (inserted) representative.push_back(t);
      transitions.push_back(it->second);
    }
  }
  std::vector<bool> accepting(representative.size());
  for (std::size_t i = 0; i < representative.size(); ++i) accepting[i] = d.accepting(representative[i]);
  return Dfa(representative.size(), 0, std::move(transitions), std::move(accepting));
}

bool equivalent(const Dfa& a, const Dfa& b) { return is_empty(product(a, b, Combine::kXor)); }

StateId Nfa::add_state(bool accepting) {
  accepting_.push_back(accepting);
  moves_.emplace_back();
  epsilon_.emplace_back();
  return static_cast<StateId>(accepting_.size() - 1);
}

void Nfa::add_move(StateId from, Symbol symbol, StateId to) {
  moves_.at(from)[static_cast<std::size_t>(symbol)].push_back(to);
}

void Nfa::add_epsilon(StateId from, StateId to) { epsilon_.at(from).push_back(to); }

namespace {

std::vector<StateId> epsilon_closure(const Nfa& n, std::vector<StateId> states) {
  std::vector<bool> seen(n.state_count(), false);
  std::vector<StateId> stack;
  for (StateId s : states) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  std::vector<StateId> closure;
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    closure.push_back(s);
    for (StateId t : n.epsilon(s)) {
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  std::sort(closure.begin(), closure.end());
  return closure;
}

}  // namespace

Dfa determinize(const Nfa& n) {
  std::map<std::vector<StateId>, StateId> ids;
  std::vector<std::vector<StateId>> subsets;
  auto intern = [&](std::vector<StateId> subset) {
    auto [it, inserted] = ids.try_emplace(subset, static_cast<StateId>(subsets.size()));
    if (inserted) subsets.push_back(std::move(subset));
    return it->second;
  };
  intern(epsilon_closure(n, {n.starts().begin(), n.starts().end()}));
  std::vector<StateId> transitions;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Symbol s : kAlphabet) {
      std::vector<StateId> targets;
      for (StateId q : subsets[i]) {
        const auto moves = n.moves(q, s);
        targets.insert(targets.end(), moves.begin(), moves.end());
      }
      transitions.push_back(intern(epsilon_closure(n, std::move(targets))));
    }
  }
  std::vector<bool> accepting(subsets.size(), false);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    accepting[i] = std::any_of(subsets[i].begin(), subsets[i].end(), [&](StateId q) { return n.accepting(q); });
  }
  return Dfa(subsets.size(), 0, std::move(transitions), std::move(accepting));
}

}  // namespace equlat
