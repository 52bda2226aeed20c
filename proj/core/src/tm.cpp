#include "equlat/tm.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "equlat/error.hpp"
#include "line_reader.hpp"

namespace equlat {

namespace {

constexpr std::string_view kTmFormat = "tm";

void trim(std::vector<std::uint8_t>& tape) {
  while (!tape.empty() && tape.back() == 0) tape.pop_back();
}

void set_cell(std::vector<std::uint8_t>& tape, std::size_t i, std::uint8_t value) {
  if (i >= tape.size()) {
    if (value == 0) return;
    tape.resize(i + 1, 0);
  }
  tape[i] = value;
  trim(tape);
}

char move_char(Move m) {
  switch (m) {
    case Move::kLeft: return 'L';
    case Move::kRight: return 'R';
    case Move::kStay: return 'S';
  }
  return '?';
}

bool valid_name(std::string_view name) {
  return !name.empty() && name.find_first_of(":#") == std::string_view::npos;
}

}  // namespace

TmSpec TmSpec::make(std::vector<std::string> states, std::string symbols, std::size_t start,
                    std::vector<bool> halting, std::vector<std::optional<Rule>> rules) {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::kInvalidMachine, msg); };
  if (states.empty()) fail("machine needs at least one state");
  if (symbols.empty()) fail("machine needs a blank symbol");
  if (symbols.size() > 255) fail("too many symbols");
  if (start >= states.size()) fail("start state out of range");
  if (halting.size() != states.size()) fail("halting table size mismatch");
  if (rules.size() != states.size() * symbols.size()) fail("rule table size mismatch");
  for (std::size_t q = 0; q < states.size(); ++q) {
    if (!valid_name(states[q])) fail("bad state name `" + states[q] + "`");
    for (std::size_t p = 0; p < q; ++p) {
      if (states[p] == states[q]) fail("duplicate state `" + states[q] + "`");
    }
  }
  if (!std::is_sorted(symbols.begin() + 1, symbols.end()) ||
      std::adjacent_find(symbols.begin() + 1, symbols.end()) != symbols.end()) {
    fail("non-blank symbols must be distinct and in ascending order");
  }
  if (std::count(symbols.begin(), symbols.end(), symbols[0]) != 1) fail("blank listed twice");
  for (char c : symbols) {
    if (c == '#' || c == ':' || std::isspace(static_cast<unsigned char>(c))) {
      fail(std::string("unusable symbol `") + c + "`");
    }
  }
  for (std::size_t q = 0; q < states.size(); ++q) {
    for (std::size_t a = 0; a < symbols.size(); ++a) {
      const auto& r = rules[q * symbols.size() + a];
      const std::string where = "(" + states[q] + ", " + symbols[a] + ")";
      if (halting[q] && r) fail("halting state has a rule at " + where);
      if (!halting[q] && !r) fail("missing rule at " + where);
      if (r && (r->next >= states.size() || r->write >= symbols.size())) fail("rule out of range at " + where);
    }
  }
  TmSpec m;
  m.states_ = std::move(states);
  m.symbols_ = std::move(symbols);
  m.start_ = start;
  m.halting_ = std::move(halting);
  m.rules_ = std::move(rules);
  return m;
}

std::optional<std::size_t> TmSpec::state_index(std::string_view name) const {
  for (std::size_t q = 0; q < states_.size(); ++q) {
    if (states_[q] == name) return q;
  }
  return std::nullopt;
}

std::optional<std::uint8_t> TmSpec::symbol_index(char c) const {
  const auto pos = symbols_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<std::uint8_t>(pos);
}

TmSpec parse_tm(std::string_view text) {
  using detail::parse_fail;
  const auto lines = detail::read_keyed_lines(text, kTmFormat);
  const detail::KeyedLine* states_line = nullptr;
  const detail::KeyedLine* start_line = nullptr;
  const detail::KeyedLine* halt_line = nullptr;
  const detail::KeyedLine* blank_line = nullptr;
  const detail::KeyedLine* symbols_line = nullptr;
  std::vector<const detail::KeyedLine*> rule_lines;
  for (const auto& line : lines) {
    const detail::KeyedLine** slot = nullptr;
    if (line.key == "states") slot = &states_line;
    else if (line.key == "start") slot = &start_line;
    else if (line.key == "halt") slot = &halt_line;
    else if (line.key == "blank") slot = &blank_line;
    else if (line.key == "symbols") slot = &symbols_line;
    else if (line.key == "rule") rule_lines.push_back(&line);
    else parse_fail(kTmFormat, line.number, "unknown key `" + line.key + "`");
    if (slot != nullptr) {
      if (*slot != nullptr) parse_fail(kTmFormat, line.number, "duplicate `" + line.key + "` line");
      *slot = &line;
    }
  }
  if (states_line == nullptr) parse_fail(kTmFormat, 0, "missing `states` line");
  if (start_line == nullptr) parse_fail(kTmFormat, 0, "missing `start` line");
  if (blank_line == nullptr) parse_fail(kTmFormat, 0, "missing `blank` line");
  if (halt_line == nullptr) parse_fail(kTmFormat, 0, "missing `halt` line");

  auto single_char = [](const std::string& token, std::size_t number) {
    if (token.size() != 1) parse_fail(kTmFormat, number, "symbols are single characters, got `" + token + "`");
    return token[0];
  };
  const auto& state_names = states_line->values;
  if (state_names.empty()) parse_fail(kTmFormat, states_line->number, "no states listed");
  auto state_of = [&](const std::string& name, std::size_t number) {
    const auto it = std::find(state_names.begin(), state_names.end(), name);
    if (it == state_names.end()) parse_fail(kTmFormat, number, "unknown state `" + name + "`");
    return static_cast<std::size_t>(it - state_names.begin());
  };
  if (start_line->values.size() != 1) parse_fail(kTmFormat, start_line->number, "expected one start state");
  if (blank_line->values.size() != 1) parse_fail(kTmFormat, blank_line->number, "expected one blank symbol");
  const std::size_t start = state_of(start_line->values[0], start_line->number);
  const char blank = single_char(blank_line->values[0], blank_line->number);

  std::vector<bool> halting(state_names.size(), false);
  for (const auto& name : halt_line->values) halting[state_of(name, halt_line->number)] = true;

  std::set<char> others;
  if (symbols_line != nullptr) {
    for (const auto& token : symbols_line->values) others.insert(single_char(token, symbols_line->number));
  }
  for (const auto* line : rule_lines) {
    if (line->values.size() != 6 || line->values[2] != "->") {
      parse_fail(kTmFormat, line->number, "expected `rule: q a -> q' b M`");
    }
    others.insert(single_char(line->values[1], line->number));
    others.insert(single_char(line->values[4], line->number));
  }
  others.erase(blank);
  std::string symbols(1, blank);
  symbols.append(others.begin(), others.end());

  std::vector<std::optional<Rule>> rules(state_names.size() * symbols.size());
  for (const auto* line : rule_lines) {
    const std::size_t q = state_of(line->values[0], line->number);
    const auto a = symbols.find(line->values[1][0]);
    Rule r;
    r.next = state_of(line->values[3], line->number);
    r.write = static_cast<std::uint8_t>(symbols.find(line->values[4][0]));
    const std::string& move = line->values[5];
    if (move == "L") r.move = Move::kLeft;
    else if (move == "R") r.move = Move::kRight;
    else if (move == "S") r.move = Move::kStay;
    else parse_fail(kTmFormat, line->number, "move must be L, R or S");
    auto& slot = rules[q * symbols.size() + a];
    if (slot) parse_fail(kTmFormat, line->number, "second rule for the same state and symbol");
    slot = r;
  }
  return TmSpec::make(state_names, std::move(symbols), start, std::move(halting), std::move(rules));
}

std::string format_tm(const TmSpec& m) {
  std::ostringstream out;
  out << "states:";
  for (std::size_t q = 0; q < m.state_count(); ++q) out << ' ' << m.state_name(q);
  out << "\nstart: " << m.state_name(m.start()) << "\nhalt:";
  for (std::size_t q = 0; q < m.state_count(); ++q) {
    if (m.is_halting(q)) out << ' ' << m.state_name(q);
  }
  out << "\nblank: " << m.blank() << '\n';
  if (m.symbol_count() > 1) {
    out << "symbols:";
    for (std::size_t a = 1; a < m.symbol_count(); ++a) out << ' ' << m.symbol(a);
    out << '\n';
  }
  for (std::size_t q = 0; q < m.state_count(); ++q) {
    for (std::size_t a = 0; a < m.symbol_count(); ++a) {
      if (const auto& r = m.rule(q, a)) {
        out << "rule: " << m.state_name(q) << ' ' << m.symbol(a) << " -> " << m.state_name(r->next) << ' '
            << m.symbol(r->write) << ' ' << move_char(r->move) << '\n';
      }
    }
  }
  return out.str();
}

Configuration initial_configuration(const TmSpec& m, std::string_view input) {
  Configuration c;
  c.state = m.start();
  for (char ch : input) {
    const auto a = m.symbol_index(ch);
    if (!a) throw Error(ErrorKind::kInvalidArgument, std::string("input symbol `") + ch + "` not in the alphabet");
    c.tape.push_back(*a);
  }
  trim(c.tape);
  return c;
}

bool is_final(const TmSpec& m, const Configuration& c) { return m.is_halting(c.state); }

std::optional<Configuration> step(const TmSpec& m, const Configuration& c) {
  const auto& r = m.rule(c.state, c.cell(c.head));
  if (!r) return std::nullopt;
  Configuration next{r->next, c.head, c.tape};
  set_cell(next.tape, c.head, r->write);
  if (r->move == Move::kRight) ++next.head;
  if (r->move == Move::kLeft && next.head > 0) --next.head;
  return next;
}

std::vector<Configuration> predecessors(const TmSpec& m, const Configuration& c) {
  std::vector<Configuration> found;
  for (std::size_t q = 0; q < m.state_count(); ++q) {
    for (std::size_t a = 0; a < m.symbol_count(); ++a) {
      const auto& r = m.rule(q, a);
      if (!r || r->next != c.state) continue;
      std::vector<std::size_t> heads;
      switch (r->move) {
        case Move::kRight:
          if (c.head > 0) heads.push_back(c.head - 1);
          break;
        case Move::kStay:
          heads.push_back(c.head);
          break;
        case Move::kLeft:
          heads.push_back(c.head + 1);
          if (c.head == 0) heads.push_back(0);
          break;
      }
      for (std::size_t h : heads) {
        if (c.cell(h) != r->write) continue;
        Configuration p{q, h, c.tape};
        set_cell(p.tape, h, static_cast<std::uint8_t>(a));
        if (step(m, p) == c && std::find(found.begin(), found.end(), p) == found.end()) found.push_back(std::move(p));
      }
    }
  }
  return found;
}

std::string tape_string(const TmSpec& m, const Configuration& c) {
  std::string out;
  for (auto a : c.tape) out.push_back(m.symbol(a));
  return out;
}

std::string describe(const TmSpec& m, const Configuration& c) {
  std::string out = m.state_name(c.state) + " @" + std::to_string(c.head) + " [";
  const std::size_t end = std::max(c.tape.size(), c.head + 1);
  for (std::size_t i = 0; i < end; ++i) {
    if (i == c.head) out.push_back('>');
    out.push_back(m.symbol(c.cell(i)));
  }
  return out + "]";
}

SimulationResult simulate(const TmSpec& m, Configuration c, std::size_t max_steps) {
  SimulationResult result;
  while (true) {
    if (is_final(m, c)) {
      result.halted = true;
      break;
    }
    if (result.steps == max_steps) break;
    c = *step(m, c);
    ++result.steps;
  }
  result.last = std::move(c);
  return result;
}

namespace {

Natural from_bijective(const std::vector<std::size_t>& digits, std::size_t base) {
  Natural value = 0;
  for (std::size_t d : digits) value = value * base + d;
  return value;
}

std::vector<std::size_t> to_bijective(Natural value, std::size_t base) {
  std::vector<std::size_t> digits;
  while (value > 0) {
    Natural quotient, remainder;
    divide_qr(value, Natural(base), quotient, remainder);
    std::size_t d = remainder.convert_to<std::size_t>();
    if (d == 0) {
      d = base;
      quotient -= 1;
    }
    digits.push_back(d);
    value = std::move(quotient);
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace

Natural encode_configuration(const TmSpec& m, const Configuration& c) {
  const std::size_t gamma = m.symbol_count();
  std::vector<std::size_t> digits;
  for (std::size_t i = 0; i < c.head; ++i) digits.push_back(c.cell(i) + 1);
  digits.push_back(gamma + c.state + 1);
  const std::size_t end = std::max(c.tape.size(), c.head + 1);
  for (std::size_t i = c.head; i < end; ++i) digits.push_back(c.cell(i) + 1);
  return from_bijective(digits, gamma + m.state_count());
}

std::optional<Configuration> decode_configuration(const TmSpec& m, const Natural& code) {
  const std::size_t gamma = m.symbol_count();
  const auto digits = to_bijective(code, gamma + m.state_count());
  Configuration c;
  std::optional<std::size_t> state_at;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const std::size_t d = digits[i] - 1;
    if (d >= gamma) {
      if (state_at) return std::nullopt;
      state_at = i;
      c.state = d - gamma;
    } else {
      c.tape.push_back(static_cast<std::uint8_t>(d));
    }
  }
  if (!state_at) return std::nullopt;
  const std::size_t after = digits.size() - *state_at - 1;
  if (after == 0) return std::nullopt;
  if (after > 1 && c.tape.back() == 0) return std::nullopt;
  c.head = *state_at;
  trim(c.tape);
  return c;
}

Natural machine_code(const TmSpec& m) {
  const std::string text = format_tm(m);
  std::vector<std::size_t> digits;
  for (unsigned char byte : text) digits.push_back(std::size_t{byte} + 1);
  return from_bijective(digits, 256);
}

std::optional<TmSpec> decode_machine(const Natural& code) {
  std::string text;
  for (std::size_t d : to_bijective(code, 256)) text.push_back(static_cast<char>(d - 1));
  try {
    TmSpec m = parse_tm(text);
    if (format_tm(m) != text) return std::nullopt;
    return m;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace equlat
