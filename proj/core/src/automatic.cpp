#include "equlat/automatic.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "equlat/disjoint_set.hpp"
#include "equlat/error.hpp"

namespace equlat {
namespace {

constexpr std::uint32_t kNoClass = AutomaticEq::kNoClass;

// Canonical-binrep recognizer over bits, used inside product searches:
// 0 = empty, 1 = "0", 2 = starts with 1, 3 = dead.
namespace canon {
constexpr std::uint8_t kStart = 0;
constexpr std::uint8_t kDead = 3;
constexpr std::uint8_t next(std::uint8_t c, Symbol bit) {
  switch (c) {
    case 0: return bit == Symbol::kZero ? 1 : 2;
    case 2: return 2;
    default: return kDead;
  }
}
constexpr bool accepting(std::uint8_t c) { return c == 1 || c == 2; }
}  // namespace canon

// Pre-□ states reached from the start by some canonical binrep.
std::vector<bool> canonical_pre_states(const Dfa& d) {
  std::set<std::pair<StateId, std::uint8_t>> seen;
  std::vector<std::pair<StateId, std::uint8_t>> stack{{d.start(), canon::kStart}};
  seen.insert(stack.back());
  std::vector<bool> result(d.state_count(), false);
  while (!stack.empty()) {
    const auto [q, c] = stack.back();
    stack.pop_back();
    if (canon::accepting(c)) result[q] = true;
    for (Symbol b : kBits) {
      const std::uint8_t nc = canon::next(c, b);
      if (nc == canon::kDead) continue;
      if (seen.insert({d.next(q, b), nc}).second) stack.emplace_back(d.next(q, b), nc);
    }
  }
  return result;
}

void require_format(const Dfa& d, const char* what) {
  if (!check_format(d)) {
    throw Error(ErrorKind::kInvalidArgument, std::string(what) + " requires an automaton in pair format");
  }
}

}  // namespace

std::string binrep(std::uint64_t n) {
  if (n == 0) return "0";
  std::string bits;
  for (; n > 0; n >>= 1) bits.push_back(static_cast<char>('0' + (n & 1)));
  std::reverse(bits.begin(), bits.end());
  return bits;
}

Word binrep_word(std::uint64_t n) { return word_from_string(binrep(n)); }

Word pair_word(std::uint64_t m, std::uint64_t n) {
  Word word = binrep_word(m);
  word.push_back(Symbol::kBlank);
  const Word tail = binrep_word(n);
  word.insert(word.end(), tail.begin(), tail.end());
  return word;
}

std::uint64_t binrep_value(std::span<const Symbol> bits) {
  if (bits.size() > 64) throw Error(ErrorKind::kOverflow, "binary word longer than 64 bits");
  std::uint64_t value = 0;
  for (Symbol s : bits) {
    if (s == Symbol::kBlank) throw Error(ErrorKind::kInvalidArgument, "separator inside a binary word");
    value = (value << 1) | (s == Symbol::kOne ? 1 : 0);
  }
  return value;
}

Dfa canonical_binrep_dfa() {
  // 0 start, 1 "0", 2 nonzero, 3 dead
  return Dfa(4, 0,
             {1, 2, 3,  //
              3, 3, 3,  //
              2, 2, 3,  //
              3, 3, 3},
             {false, true, true, false});
}

Dfa pair_format_dfa() {
  // 0 start, 1 "0", 2 nonzero, 3 after □, 4 "0", 5 nonzero, 6 dead
  return Dfa(7, 0,
             {1, 2, 6,  //
              6, 6, 3,  //
              2, 2, 3,  //
              4, 5, 6,  //
              6, 6, 6,  //
              5, 5, 6,  //
              6, 6, 6},
             {false, false, false, false, true, true, false});
}

bool check_format(const Dfa& d) { return is_empty(product(d, pair_format_dfa(), Combine::kAndNot)); }

bool check_reflexive(const Dfa& d) {
  using Function = std::vector<StateId>;
  const std::size_t n = d.state_count();
  auto extend = [&](const Function& g, Symbol bit) {
    Function h(n);
    for (StateId s = 0; s < n; ++s) h[s] = d.next(g[s], bit);
    return h;
  };
  auto accepts_square = [&](const Function& g) {
    return d.accepting(g[d.next(g[d.start()], Symbol::kBlank)]);
  };
  Function identity(n);
  for (StateId s = 0; s < n; ++s) identity[s] = s;

  // The only canonical word starting with 0 is "0" itself.
  if (!accepts_square(extend(identity, Symbol::kZero))) return false;

  std::set<Function> seen;
  std::deque<Function> queue{extend(identity, Symbol::kOne)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Function g = std::move(queue.front());
    queue.pop_front();
    if (!accepts_square(g)) return false;
    for (Symbol b : kBits) {
      Function h = extend(g, b);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return true;
}

bool check_reflexive_sampled(const Dfa& d, std::uint64_t bound) {
  for (std::uint64_t m = 0; m < bound; ++m) {
    if (!d.accepts(pair_word(m, m))) return false;
  }
  return true;
}

Dfa swap_language(const Dfa& d) {
  require_format(d, "swap_language");
  const std::size_t n = d.state_count();
  // Pre-□ states: reachable from the start over bits.
  std::vector<bool> pre(n, false);
  std::vector<StateId> stack{d.start()};
  pre[d.start()] = true;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (Symbol b : kBits) {
      const StateId t = d.next(q, b);
      if (!pre[t]) {
        pre[t] = true;
        stack.push_back(t);
      }
    }
  }

  // For each pre-□ state s: read v with d from s□ (R_s), then □, then w
  // from the start ending in s (L_s).
  Nfa nfa;
  for (StateId s = 0; s < n; ++s) {
    if (!pre[s]) continue;
    const StateId first = static_cast<StateId>(nfa.state_count());
    for (StateId q = 0; q < n; ++q) nfa.add_state(false);
    const StateId second = static_cast<StateId>(nfa.state_count());
    for (StateId q = 0; q < n; ++q) nfa.add_state(q == s);
    for (StateId q = 0; q < n; ++q) {
      for (Symbol b : kBits) {
        nfa.add_move(first + q, b, first + d.next(q, b));
        nfa.add_move(second + q, b, second + d.next(q, b));
      }
      if (d.accepting(q)) nfa.add_move(first + q, Symbol::kBlank, second + d.start());
    }
    nfa.add_start(first + d.next(s, Symbol::kBlank));
  }
  if (nfa.state_count() == 0) nfa.add_start(nfa.add_state(false));
  return minimize(determinize(nfa));
}

bool check_symmetric(const Dfa& d) { return equivalent(d, swap_language(d)); }

bool check_transitive(const Dfa& d) {
  require_format(d, "check_transitive");
  const std::size_t n = d.state_count();
  const auto pre = canonical_pre_states(d);
  const auto language = state_language_classes(d);
  std::map<std::pair<StateId, StateId>, bool> included;
  for (StateId s = 0; s < n; ++s) {
    if (!pre[s]) continue;
    const StateId post = d.next(s, Symbol::kBlank);
    // Triples (state after reading n from the start, canonical tracker,
    // state after reading n from s□).
    using Triple = std::tuple<StateId, std::uint8_t, StateId>;
    std::set<Triple> seen;
    std::vector<Triple> work{{d.start(), canon::kStart, post}};
    seen.insert(work.back());
    while (!work.empty()) {
      const auto [q1, c, q2] = work.back();
      work.pop_back();
      if (canon::accepting(c) && d.accepting(q2)) {
        // m ~ n and n ~ p must give m ~ p: what follows n□ is contained in
        // what follows m□.
        const StateId other = d.next(q1, Symbol::kBlank);
        if (language[other] != language[post]) {
          auto [it, fresh] = included.try_emplace({other, post}, false);
          if (fresh) it->second = is_empty(product(d.with_start(other), d.with_start(post), Combine::kAndNot));
          if (!it->second) return false;
        }
      }
      for (Symbol b : kBits) {
        const std::uint8_t nc = canon::next(c, b);
        if (nc == canon::kDead) continue;
        Triple t{d.next(q1, b), nc, d.next(q2, b)};
        if (seen.insert(t).second) work.push_back(t);
      }
    }
  }
  return true;
}

std::string AxiomReport::failures() const {
  std::string out;
  auto add = [&](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ", ";
    out += name;
  };
  add(format, "format");
  add(reflexive, "reflexive");
  add(symmetric, "symmetric");
  add(transitive, "transitive");
  return out;
}

AxiomReport check_axioms(const Dfa& d, ReflexivityMode mode, std::uint64_t sample_bound) {
  AxiomReport report;
  report.format = check_format(d);
  if (!report.format) return report;
  report.reflexive = mode == ReflexivityMode::kExact ? check_reflexive(d) : check_reflexive_sampled(d, sample_bound);
  report.symmetric = check_symmetric(d);
  report.transitive = check_transitive(d);
  return report;
}

StateId BitClassifier::run(std::uint64_t value) const {
  StateId q = start;
  for (Symbol b : binrep_word(value)) q = next[q * 2 + static_cast<std::size_t>(b)];
  return q;
}

Dfa label_relation_dfa(const BitClassifier& c, const std::function<bool(std::uint32_t, std::uint32_t)>& related) {
  // (phase, first label, classifier state, canonical tracker); phase 0 reads
  // m, phase 1 reads n, phase 2 is the dead state.
  using Key = std::tuple<std::uint8_t, std::uint32_t, StateId, std::uint8_t>;
  const Key dead{2, 0, 0, 0};
  std::map<Key, StateId> ids;
  std::vector<Key> keys;
  auto intern = [&](const Key& k) {
    auto [it, inserted] = ids.try_emplace(k, static_cast<StateId>(keys.size()));
    if (inserted) keys.push_back(k);
    return it->second;
  };
  intern({0, 0, c.start, canon::kStart});
  std::vector<StateId> transitions;
  std::vector<bool> accepting;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto [phase, first_label, q, tracker] = keys[i];
    for (Symbol s : kAlphabet) {
      Key target = dead;
      if (phase < 2 && s != Symbol::kBlank) {
        const std::uint8_t nc = canon::next(tracker, s);
        if (nc != canon::kDead) target = Key{phase, first_label, c.next[q * 2 + static_cast<std::size_t>(s)], nc};
      } else if (phase == 0 && s == Symbol::kBlank && canon::accepting(tracker)) {
        target = Key{1, c.label[q], c.start, canon::kStart};
      }
      transitions.push_back(intern(target));
    }
  }
  accepting.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto [phase, first_label, q, tracker] = keys[i];
    accepting[i] = phase == 1 && canon::accepting(tracker) && related(first_label, c.label[q]);
  }
  return minimize(Dfa(keys.size(), 0, std::move(transitions), std::move(accepting)));
}

Dfa kernel_dfa(const BitClassifier& c) {
  return label_relation_dfa(c, [](std::uint32_t a, std::uint32_t b) { return a == b; });
}

namespace classifiers {

BitClassifier constant() { return BitClassifier{1, 0, {0, 0}, {0}}; }

BitClassifier value_mod(std::uint32_t k) {
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "modulus must be positive");
  BitClassifier c{k, 0, std::vector<StateId>(2 * k), std::vector<std::uint32_t>(k)};
  for (std::uint32_t r = 0; r < k; ++r) {
    c.next[2 * r] = (2 * r) % k;
    c.next[2 * r + 1] = (2 * r + 1) % k;
    c.label[r] = r;
  }
  return c;
}

BitClassifier length_capped(std::uint32_t k) {
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "length cap must be positive");
  BitClassifier c{k + 1, 0, std::vector<StateId>(2 * (k + 1)), std::vector<std::uint32_t>(k + 1)};
  for (std::uint32_t l = 0; l <= k; ++l) {
    c.next[2 * l] = c.next[2 * l + 1] = std::min(l + 1, k);
    c.label[l] = l;
  }
  return c;
}

BitClassifier equals(std::uint64_t i) {
  const std::string bits = binrep(i);
  const auto length = static_cast<StateId>(bits.size());
  const StateId mismatch = length + 1;
  BitClassifier c{length + 2u, 0, std::vector<StateId>(2 * (length + 2)), std::vector<std::uint32_t>(length + 2, 0)};
  for (StateId k = 0; k <= mismatch; ++k) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      c.next[2 * k + b] = (k < length && bits[k] == static_cast<char>('0' + b)) ? k + 1 : mismatch;
    }
  }
  c.label[length] = 1;
  return c;
}

BitClassifier popcount_parity() { return BitClassifier{2, 0, {0, 1, 1, 0}, {0, 1}}; }

}  // namespace classifiers

AutomaticEq::AutomaticEq(Dfa minimal) : dfa_(std::move(minimal)) {
  const auto pre = canonical_pre_states(dfa_);
  const auto language = state_language_classes(dfa_);
  // One class per distinct post-□ language.
  std::map<std::uint32_t, std::pair<std::uint64_t, StateId>> by_language;
  for (StateId q = 0; q < dfa_.state_count(); ++q) {
    if (!pre[q]) continue;
    const StateId post = dfa_.next(q, Symbol::kBlank);
    if (by_language.count(language[post])) continue;
    const auto least = shortlex_least_word(dfa_, post);
    if (!least) throw Error(ErrorKind::kNotEquivalence, "a class has no members (relation is not reflexive)");
    by_language.emplace(language[post], std::make_pair(binrep_value(*least), post));
  }
  std::vector<std::pair<std::uint64_t, StateId>> classes;
  for (const auto& [key, entry] : by_language) classes.push_back(entry);
  std::sort(classes.begin(), classes.end());
  std::map<std::uint32_t, std::uint32_t> index_of_language;
  for (std::uint32_t i = 0; i < classes.size(); ++i) {
    representatives_.push_back(classes[i].first);
    class_post_state_.push_back(classes[i].second);
    index_of_language[language[classes[i].second]] = i;
  }
  pre_state_class_.assign(dfa_.state_count(), kNoClass);
  for (StateId q = 0; q < dfa_.state_count(); ++q) {
    if (pre[q]) pre_state_class_[q] = index_of_language.at(language[dfa_.next(q, Symbol::kBlank)]);
  }
}

AutomaticEq AutomaticEq::from_dfa(const Dfa& d, ReflexivityMode mode) {
  const AxiomReport report = check_axioms(d, mode);
  if (!report.all()) throw Error(ErrorKind::kNotEquivalence, "automaton fails: " + report.failures());
  return AutomaticEq(minimize(d));
}

AutomaticEq AutomaticEq::from_trusted_dfa(const Dfa& d) { return AutomaticEq(minimize(d)); }

bool AutomaticEq::decide(std::uint64_t m, std::uint64_t n) const { return dfa_.accepts(pair_word(m, n)); }

std::size_t AutomaticEq::class_index(std::uint64_t m) const {
  const StateId q = dfa_.run(dfa_.start(), binrep_word(m));
  return pre_state_class_[q];
}

Partition AutomaticEq::restrict(std::size_t n) const {
  std::vector<std::size_t> labels(n);
  for (std::size_t m = 0; m < n; ++m) labels[m] = class_index(m);
  return Partition::from_labels(labels);
}

AutomaticEq meet(const AutomaticEq& a, const AutomaticEq& b) {
  return AutomaticEq::from_trusted_dfa(product(a.dfa(), b.dfa(), Combine::kAnd));
}

JoinAnalysis analyze_join(const AutomaticEq& a, const AutomaticEq& b) {
  JoinAnalysis analysis;
  const std::size_t na = a.class_count();
  const std::size_t nb = b.class_count();
  DisjointSet components(na + nb);
  std::uint64_t largest = 0;
  for (std::uint64_t r : a.representatives()) largest = std::max(largest, r);
  for (std::uint64_t r : b.representatives()) largest = std::max(largest, r);
  for (std::size_t i = 0; i < na; ++i) {
    const Dfa from_a = a.dfa().with_start(a.post_separator_state(i));
    for (std::size_t j = 0; j < nb; ++j) {
      const Dfa both = product(from_a, b.dfa().with_start(b.post_separator_state(j)), Combine::kAnd);
      const auto shared = shortlex_least_word(both, both.start());
      if (!shared) continue;
      const std::uint64_t witness = binrep_value(*shared);
      analysis.edges.push_back({i, j, witness});
      largest = std::max(largest, witness);
      components.unite(i, na + j);
    }
  }
  std::map<std::size_t, std::size_t> numbering;
  auto component_of = [&](std::size_t node) {
    return numbering.try_emplace(components.find(node), numbering.size()).first->second;
  };
  for (std::size_t i = 0; i < na; ++i) analysis.a_component.push_back(component_of(i));
  for (std::size_t j = 0; j < nb; ++j) analysis.b_component.push_back(component_of(na + j));
  analysis.component_count = numbering.size();
  analysis.restriction_cutoff = largest + 1;
  return analysis;
}

namespace {

// Reads m through the pre-□ states of `a` and labels it by the block of its
// class. States no canonical binrep reaches keep kNoClass; the relation
// automaton never compares their labels.
BitClassifier class_block_classifier(const AutomaticEq& a, std::span<const std::size_t> block_of_class) {
  const Dfa& d = a.dfa();
  BitClassifier c{d.state_count(), d.start(), std::vector<StateId>(2 * d.state_count()),
                  std::vector<std::uint32_t>(d.state_count(), kNoClass)};
  for (StateId q = 0; q < d.state_count(); ++q) {
    c.next[2 * q] = d.next(q, Symbol::kZero);
    c.next[2 * q + 1] = d.next(q, Symbol::kOne);
    if (const std::uint32_t cls = a.pre_state_class(q); cls != kNoClass) {
      c.label[q] = static_cast<std::uint32_t>(block_of_class[cls]);
    }
  }
  return c;
}

}  // namespace

AutomaticEq join(const AutomaticEq& a, const AutomaticEq& b) {
  const JoinAnalysis analysis = analyze_join(a, b);
  return AutomaticEq::from_trusted_dfa(kernel_dfa(class_block_classifier(a, analysis.a_component)));
}

AutomaticEq coarsen(const AutomaticEq& a, const Partition& grouping) {
  if (grouping.universe_size() != a.class_count()) {
    throw Error(ErrorKind::kUniverseMismatch, "grouping covers " + std::to_string(grouping.universe_size()) +
                                                  " classes, relation has " + std::to_string(a.class_count()));
  }
  return AutomaticEq::from_trusted_dfa(kernel_dfa(class_block_classifier(a, grouping.labels())));
}

AutomaticEq singleton_family(std::uint64_t i) {
  return AutomaticEq::from_trusted_dfa(kernel_dfa(classifiers::equals(i)));
}

std::vector<std::size_t> family_meet_demo(std::size_t k) {
  std::vector<std::size_t> counts;
  if (k == 0) return counts;
  AutomaticEq folded = singleton_family(1);
  counts.push_back(folded.class_count());
  for (std::uint64_t i = 2; i <= k; ++i) {
    folded = meet(folded, singleton_family(i));
    counts.push_back(folded.class_count());
  }
  return counts;
}

AutomaticEq top_relation() { return AutomaticEq::from_trusted_dfa(kernel_dfa(classifiers::constant())); }

}  // namespace equlat
