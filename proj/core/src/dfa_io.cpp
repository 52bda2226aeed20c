#include "equlat/dfa_io.hpp"

#include <optional>
#include <sstream>

#include "equlat/error.hpp"
#include "line_reader.hpp"

namespace equlat {
namespace {

constexpr std::string_view kFormat = "dfa";
constexpr StateId kUnset = static_cast<StateId>(-1);

Symbol parse_symbol(const std::string& token, std::size_t line) {
  if (token == "0") return Symbol::kZero;
  if (token == "1") return Symbol::kOne;
  if (token == "B" || token == "□") return Symbol::kBlank;
  detail::parse_fail(kFormat, line, "unknown symbol `" + token + "` (expected 0, 1 or B)");
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
  const auto lines = detail::read_keyed_lines(text, kFormat);
  std::optional<std::size_t> states;
  std::optional<StateId> start;
  std::vector<StateId> accept;
  for (const auto& line : lines) {
    if (line.key == "states") {
      if (states || line.values.size() != 1) detail::parse_fail(kFormat, line.number, "expected one `states` value");
      states = detail::parse_natural(line.values[0], kFormat, line.number);
      if (*states == 0) detail::parse_fail(kFormat, line.number, "automaton needs at least one state");
    } else if (line.key == "start") {
      if (start || line.values.size() != 1) detail::parse_fail(kFormat, line.number, "expected one `start` value");
      start = static_cast<StateId>(detail::parse_natural(line.values[0], kFormat, line.number));
    } else if (line.key == "accept") {
      for (const auto& v : line.values) accept.push_back(static_cast<StateId>(detail::parse_natural(v, kFormat, line.number)));
    } else if (line.key != "trans") {
      detail::parse_fail(kFormat, line.number, "unknown key `" + line.key + "`");
    }
  }
  if (!states) throw Error(ErrorKind::kParse, "dfa: missing `states`");
  if (!start) throw Error(ErrorKind::kParse, "dfa: missing `start`");
  if (*start >= *states) throw Error(ErrorKind::kParse, "dfa: start state out of range");

  std::vector<bool> accepting(*states, false);
  for (StateId q : accept) {
    if (q >= *states) throw Error(ErrorKind::kParse, "dfa: accepting state " + std::to_string(q) + " out of range");
    accepting[q] = true;
  }
  std::vector<StateId> transitions(*states * kAlphabetSize, kUnset);
  for (const auto& line : lines) {
    if (line.key != "trans") continue;
    if (line.values.size() != 3) detail::parse_fail(kFormat, line.number, "expected `trans: state symbol state`");
    const auto from = detail::parse_natural(line.values[0], kFormat, line.number);
    const Symbol symbol = parse_symbol(line.values[1], line.number);
    const auto to = detail::parse_natural(line.values[2], kFormat, line.number);
    if (from >= *states || to >= *states) detail::parse_fail(kFormat, line.number, "state out of range");
    auto& slot = transitions[from * kAlphabetSize + static_cast<std::size_t>(symbol)];
    if (slot != kUnset) detail::parse_fail(kFormat, line.number, "duplicate transition");
    slot = static_cast<StateId>(to);
  }
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    if (transitions[i] == kUnset) {
      throw Error(ErrorKind::kParse, "dfa: missing transition from state " + std::to_string(i / kAlphabetSize) +
                                         " on " + symbol_char(static_cast<Symbol>(i % kAlphabetSize)));
    }
  }
  return Dfa(*states, *start, std::move(transitions), std::move(accepting));
}

std::string format_dfa(const Dfa& d) {
  std::ostringstream out;
  out << "states: " << d.state_count() << '\n' << "start: " << d.start() << '\n' << "accept:";
  for (StateId q = 0; q < d.state_count(); ++q) {
    if (d.accepting(q)) out << ' ' << q;
  }
  out << '\n';
  for (StateId q = 0; q < d.state_count(); ++q) {
    for (Symbol s : kAlphabet) out << "trans: " << q << ' ' << symbol_char(s) << ' ' << d.next(q, s) << '\n';
  }
  return out.str();
}

}  // namespace equlat
