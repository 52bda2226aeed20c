#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "decider_expr.hpp"
#include "equlat/automatic.hpp"
#include "equlat/checks/suites.hpp"
#include "equlat/checks/zoo.hpp"
#include "equlat/clocked.hpp"
#include "equlat/constructions.hpp"
#include "equlat/dfa_io.hpp"
#include "equlat/error.hpp"
#include "equlat/partition_io.hpp"
#include "equlat/predicates.hpp"
#include "equlat/text_io.hpp"

namespace equlat::cli {
namespace {

using Action = std::function<CommandResult()>;

CommandResult ok(std::string report, std::optional<std::string> output = std::nullopt) {
  return {kExitOk, std::move(report), std::move(output)};
}

CommandResult checked(bool passed, std::string report, std::optional<std::string> output = std::nullopt) {
  return {passed ? kExitOk : kExitCheckFailed, std::move(report), std::move(output)};
}

const char* yes_no(bool b) { return b ? "true" : "false"; }
const char* pass_fail(bool b) { return b ? "pass" : "FAIL"; }

std::string join_numbers(std::span<const std::uint64_t> xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

std::string set_text(std::span<const Element> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out + "}";
}

Natural parse_natural(const std::string& text) { return parse_natural_text(text); }

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const Natural v = parse_natural(item);
    if (!fits_u64(v)) throw Error(ErrorKind::kOverflow, "`" + item + "` is too large");
    values.push_back(static_cast<std::uint64_t>(v));
  }
  if (values.empty()) throw Error(ErrorKind::kParse, "empty list");
  return values;
}

Partition load_partition(const std::string& path) { return parse_partition(read_text_file(path)); }

void same_universe(const Partition& a, const Partition& b) {
  if (a.universe_size() != b.universe_size()) {
    throw Error(ErrorKind::kUniverseMismatch, "universes differ: " + std::to_string(a.universe_size()) + " vs " +
                                                  std::to_string(b.universe_size()));
  }
}

// A relation argument is a DFA file or the name of a built-in relation.
Dfa load_dfa(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return parse_dfa(read_text_file(arg));
  const auto names = checks::builtin_relation_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return checks::builtin_relation_dfa(arg);
  throw Error(ErrorKind::kInvalidArgument, "no DFA file or built-in relation named `" + arg + "`");
}

AutomaticEq load_relation(const std::string& arg) { return AutomaticEq::from_dfa(load_dfa(arg)); }

Predicate load_predicate(const std::string& arg) {
  if (arg.rfind("bitmask:", 0) == 0) return bitmask_predicate(arg.substr(8));
  const auto names = predicate_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return named_predicate(arg);
  if (std::filesystem::is_regular_file(arg)) return bitmask_predicate(read_text_file(arg));
  throw Error(ErrorKind::kInvalidArgument, "no predicate or bitmask file named `" + arg + "`");
}

SingularFamilySpec load_family(const std::string& pred, const std::string& cuts, std::size_t k) {
  SingularFamilySpec spec{load_predicate(pred), cuts.empty() ? default_cuts(k + 1) : parse_list(cuts)};
  validate(spec);
  if (k >= spec.cuts.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "K = " + std::to_string(k) + " needs at least " + std::to_string(k + 1) + " cuts");
  }
  return spec;
}

std::string small_eq_summary(const SmallEq& e) {
  auto head = e.tail_head_members();
  return set_text(head) + " ∪ ↑" + std::to_string(e.threshold());
}

std::string chain_text(const RelatedWitness& w) {
  std::string out = to_string(w.chain.front());
  for (std::size_t i = 0; i < w.via.size(); ++i) {
    out += w.via[i] == JoinSide::kFirst ? " ~1 " : " ~2 ";
    out += to_string(w.chain[i + 1]);
  }
  return out;
}

// --- partition -------------------------------------------------------------

namespace partition_args {
std::string a;
std::string b;

void reset() {
  a = std::string{};
  b = std::string{};
}
}  // namespace partition_args

void add_partition(CLI::App& app, Action& action) {
  using namespace partition_args;
  auto* group = app.add_subcommand("partition", "lattice operations on partition files");
  group->require_subcommand(1);
  for (const char* name : {"meet", "join", "leq"}) {
    auto* sub = group->add_subcommand(name, std::string(name) + " of two partitions on a common universe");
    sub->add_option("a", a, "partition file")->required();
    sub->add_option("b", b, "partition file")->required();
    const std::string op = name;
    sub->callback([&action, op] {
      action = [op] {
        const Partition e = load_partition(a);
        const Partition f = load_partition(b);
        same_universe(e, f);
        if (op == "leq") return ok(yes_no(leq(e, f)));
        const Partition r = op == "meet" ? meet(e, f) : join(e, f);
        return ok(op + ": " + std::to_string(r.class_count()) + " classes", format_partition(r));
      };
    });
  }
  auto* complement = group->add_subcommand("complement", "least-element complement");
  complement->add_option("a", a, "partition file")->required();
  complement->callback([&action] {
    action = [] {
      const Partition e = load_partition(a);
      const Partition c = least_element_complement(e);
      return ok("complement: big class " + set_text(non_singleton_class(c)), format_partition(c));
    };
  });
  auto* atoms = group->add_subcommand("atoms", "atomistic decomposition; output is the join of the atoms");
  atoms->add_option("a", a, "partition file")->required();
  atoms->callback([&action] {
    action = [] {
      const Partition e = load_partition(a);
      const auto parts = atomistic_decomposition(e);
      std::string report;
      for (const auto& atom : parts) report += "atom: " + std::to_string(atom.low) + " " + std::to_string(atom.high) + "\n";
      const Partition back = join_atoms(parts, e.universe_size());
      report += std::to_string(parts.size()) + " atoms; join recovers the input: " + yes_no(back == e);
      return checked(back == e, report, format_partition(back));
    };
  });
}

// --- automatic -------------------------------------------------------------

namespace automatic_args {
std::string r;
std::string s;
std::uint64_t m = 0;
std::uint64_t n = 0;
std::size_t size = 16;

void reset() {
  r = std::string{};
  s = std::string{};
  m = 0;
  n = 0;
  size = 16;
}
}  // namespace automatic_args

void add_automatic(CLI::App& app, Action& action) {
  using namespace automatic_args;
  auto* group = app.add_subcommand("automatic", "automatic equivalences given as DFA files or built-in names");
  group->require_subcommand(1);

  auto* decide = group->add_subcommand("decide", "is m related to n");
  decide->add_option("relation", r)->required();
  decide->add_option("m", m)->required();
  decide->add_option("n", n)->required();
  decide->callback([&action] { action = [] { return ok(yes_no(load_relation(r).decide(m, n))); }; });

  for (const char* name : {"meet", "join"}) {
    auto* sub = group->add_subcommand(name, std::string(name) + " of two relations, as a minimal DFA");
    sub->add_option("a", r)->required();
    sub->add_option("b", s)->required();
    const std::string op = name;
    sub->callback([&action, op] {
      action = [op] {
        const AutomaticEq a = load_relation(r);
        const AutomaticEq b = load_relation(s);
        const AutomaticEq c = op == "meet" ? meet(a, b) : join(a, b);
        return ok(op + ": " + std::to_string(c.class_count()) + " classes, " + std::to_string(c.dfa().state_count()) +
                      " states",
                  format_dfa(c.dfa()));
      };
    });
  }

  auto* coarsen_cmd = group->add_subcommand("coarsen", "merge classes by a partition of class indices");
  coarsen_cmd->add_option("relation", r)->required();
  coarsen_cmd->add_option("grouping", s, "partition file over {0..classes-1}")->required();
  coarsen_cmd->callback([&action] {
    action = [] {
      const AutomaticEq c = coarsen(load_relation(r), load_partition(s));
      return ok("coarsen: " + std::to_string(c.class_count()) + " classes", format_dfa(c.dfa()));
    };
  });

  auto* check = group->add_subcommand("check", "format and each equivalence axiom, checked exactly");
  check->add_option("dfa", r)->required();
  check->callback([&action] {
    action = [] {
      const AxiomReport rep = check_axioms(load_dfa(r));
      auto line = [&](const char* what, bool v) {
        return std::string(what) + ": " + (rep.format || std::string(what) == "format" ? pass_fail(v) : "skipped") + "\n";
      };
      std::string text = line("format", rep.format) + line("reflexive", rep.reflexive) +
                         line("symmetric", rep.symmetric) + line("transitive", rep.transitive);
      text.pop_back();
      return checked(rep.all(), text);
    };
  });

  auto* reps = group->add_subcommand("reps", "least member of each class");
  reps->add_option("relation", r)->required();
  reps->callback([&action] {
    action = [] {
      const AutomaticEq a = load_relation(r);
      return ok(std::to_string(a.class_count()) + " classes; representatives: " + join_numbers(a.representatives()));
    };
  });

  auto* minimize_cmd = group->add_subcommand("minimize", "minimal equivalent DFA");
  minimize_cmd->add_option("dfa", r)->required();
  minimize_cmd->callback([&action] {
    action = [] {
      const Dfa d = load_dfa(r);
      const Dfa min = minimize(d);
      return ok(std::to_string(d.state_count()) + " -> " + std::to_string(min.state_count()) + " states",
                format_dfa(min));
    };
  });

  auto* restrict_cmd = group->add_subcommand("restrict", "the relation on {0..n-1} as a partition");
  restrict_cmd->add_option("relation", r)->required();
  restrict_cmd->add_option("--n", size, "universe size")->capture_default_str();
  restrict_cmd->callback([&action] {
    action = [] {
      const Partition p = load_relation(r).restrict(size);
      return ok("restricted to " + std::to_string(size) + ": " + std::to_string(p.class_count()) + " classes",
                format_partition(p));
    };
  });

  auto* builtin = group->add_subcommand("builtin", "emit a built-in relation's DFA; no name lists them");
  builtin->add_option("name", r);
  builtin->callback([&action] {
    action = [] {
      if (r.empty()) {
        std::string names;
        for (const auto& x : checks::builtin_relation_names()) names += x + "\n";
        names.pop_back();
        return ok(names);
      }
      const AutomaticEq a = AutomaticEq::from_dfa(checks::builtin_relation_dfa(r));
      return ok(r + ": " + std::to_string(a.class_count()) + " classes", format_dfa(a.dfa()));
    };
  });
}

// --- decider ---------------------------------------------------------------

namespace decider_args {
std::string e1;
std::string e2;
std::string m;
std::string n;
std::size_t size = 16;
std::size_t bound = DeciderEq::kDefaultCheckBound;
std::size_t chain = 0;
std::string universe;

void reset() {
  e1 = std::string{};
  e2 = std::string{};
  m = std::string{};
  n = std::string{};
  size = 16;
  bound = DeciderEq::kDefaultCheckBound;
  chain = 0;
  universe = std::string{};
}
}  // namespace decider_args

void add_decider(CLI::App& app, Action& action) {
  using namespace decider_args;
  auto* group = app.add_subcommand("decider", "decision-procedure equivalences from expressions (see `decider grammar`)");
  group->require_subcommand(1);

  auto* decide = group->add_subcommand("decide", "is m related to n");
  decide->add_option("expr", e1)->required();
  decide->add_option("m", m)->required();
  decide->add_option("n", n)->required();
  decide->callback([&action] {
    action = [] { return ok(yes_no(parse_decider(e1).decide(parse_natural(m), parse_natural(n)))); };
  });

  auto* restrict_cmd = group->add_subcommand("restrict", "the relation on {0..n-1} as a partition");
  restrict_cmd->add_option("expr", e1)->required();
  restrict_cmd->add_option("--n", size)->capture_default_str();
  restrict_cmd->callback([&action] {
    action = [] {
      const DeciderEq d = parse_decider(e1);
      const Partition p = restrict(d, size);
      return ok(d.name() + " on " + std::to_string(size) + ": " + std::to_string(p.class_count()) + " classes",
                format_partition(p));
    };
  });

  auto* check = group->add_subcommand("check", "equivalence axioms on {0..bound-1}");
  check->add_option("expr", e1)->required();
  check->add_option("--bound", bound)->capture_default_str();
  check->callback([&action] {
    action = [] {
      const DeciderEq d = parse_decider(e1);
      const auto violation = first_axiom_violation(d.procedure(), bound);
      return checked(!violation, d.name() + "\ncost: " + d.cost_note() + "\naxioms below " + std::to_string(bound) +
                                     ": " + (violation ? *violation : std::string("pass")));
    };
  });

  auto* join_cmd = group->add_subcommand("join", "bounded search for an alternating chain from m to n");
  join_cmd->add_option("first", e1)->required();
  join_cmd->add_option("second", e2)->required();
  join_cmd->add_option("m", m)->required();
  join_cmd->add_option("n", n)->required();
  join_cmd->add_option("--universe", universe, "values stay below this")->required();
  join_cmd->add_option("--chain", chain, "at most this many links (default 2 * universe)");
  join_cmd->callback([&action] {
    action = [] {
      const DeciderEq a = parse_decider(e1);
      const DeciderEq b = parse_decider(e2);
      const Natural u = parse_natural(universe);
      std::size_t links = chain;
      if (links == 0) links = u > 1u << 20 ? std::size_t{1} << 21 : static_cast<std::size_t>(2 * u);
      const JoinSearch search = bounded_join(a, b, parse_natural(m), parse_natural(n), u, links);
      if (const auto* w = std::get_if<RelatedWitness>(&search)) {
        return ok("related within bounds, " + std::to_string(w->links()) + " links (verified: " +
                  yes_no(verify_chain(a, b, *w)) + ")\n" + chain_text(*w));
      }
      const auto& miss = std::get<NotWithinBounds>(search);
      return ok("no chain within bounds (explored " + std::to_string(miss.explored) + " values, " +
                (miss.exhaustive ? "exhaustive" : "not exhaustive") + "); this does not prove the pair unrelated");
    };
  });

  auto* grammar = group->add_subcommand("grammar", "print the expression grammar");
  grammar->callback([&action] { action = [] { return ok(decider_grammar()); }; });
}

// --- tm --------------------------------------------------------------------

namespace tm_args {
std::string machine;
std::string input;
std::string code;
std::size_t bound = 1000;
bool trace = false;

void reset() {
  machine = std::string{};
  input = std::string{};
  code = std::string{};
  bound = 1000;
  trace = false;
}
}  // namespace tm_args

void add_tm(CLI::App& app, Action& action) {
  using namespace tm_args;
  auto* group = app.add_subcommand("tm", "Turing machines (zoo names or .tm files)");
  group->require_subcommand(1);

  auto* run_cmd = group->add_subcommand("run", "simulate on a left-bounded tape");
  run_cmd->add_option("machine", machine)->required();
  run_cmd->add_option("input", input);
  run_cmd->add_option("--bound", bound)->capture_default_str();
  run_cmd->add_flag("--trace", trace, "print every configuration");
  run_cmd->callback([&action] {
    action = [] {
      const TmSpec m = checks::load_machine(machine);
      Configuration c = initial_configuration(m, input);
      std::string report;
      if (trace) {
        report += "0: " + describe(m, c) + "\n";
        for (std::size_t i = 1; i <= bound; ++i) {
          const auto next = step(m, c);
          if (!next) break;
          c = *next;
          report += std::to_string(i) + ": " + describe(m, c) + "\n";
        }
      }
      const SimulationResult r = simulate(m, initial_configuration(m, input), bound);
      report += r.halted ? "halted after " + std::to_string(r.steps) + " steps"
                         : "still running after " + std::to_string(bound) + " steps";
      report += "\nfinal: " + describe(m, r.last);
      return ok(report);
    };
  });

  auto* probe = group->add_subcommand("probe", "decide halting within the bound through the bounded join");
  probe->add_option("machine", machine)->required();
  probe->add_option("input", input);
  probe->add_option("--bound", bound)->capture_default_str();
  probe->callback([&action] {
    action = [] {
      const TmSpec m = checks::load_machine(machine);
      const ProbeResult result = halting_probe(m, input, bound);
      if (const auto* h = std::get_if<HaltsInSteps>(&result)) {
        return ok("HaltsInSteps " + std::to_string(h->steps) + " (chain of " + std::to_string(h->chain.links()) +
                  " links to the sink)");
      }
      const auto& miss = std::get<NoHaltWithinBound>(result);
      return ok("NoHaltWithinBound " + std::to_string(bound) + " (explored " + std::to_string(miss.explored) +
                " points" + (miss.exhaustive ? "" : ", not exhaustive") + ")");
    };
  });

  auto* encode = group->add_subcommand("encode", "machine code: the canonical text as a bijective base-256 numeral");
  encode->add_option("machine", machine)->required();
  encode->callback([&action] {
    action = [] { return ok("machine code", to_string(machine_code(checks::load_machine(machine))) + "\n"); };
  });

  auto* decode = group->add_subcommand("decode", "canonical text of a machine code");
  decode->add_option("code", code)->required();
  decode->callback([&action] {
    action = [] {
      const auto m = decode_machine(parse_natural(code));
      if (!m) throw Error(ErrorKind::kInvalidArgument, "not a machine code");
      return ok("decoded", format_tm(*m));
    };
  });

  auto* format = group->add_subcommand("format", "canonical text of a machine");
  format->add_option("machine", machine)->required();
  format->callback([&action] { action = [] { return ok("canonical form", format_tm(checks::load_machine(machine))); }; });

  auto* zoo = group->add_subcommand("zoo", "list the shipped machines with their behaviour on the empty tape");
  zoo->add_option("--bound", bound)->capture_default_str();
  zoo->callback([&action] {
    action = [] {
      std::string report;
      for (const auto& named : checks::load_zoo()) {
        const SimulationResult r = simulate(named.spec, initial_configuration(named.spec, ""), bound);
        report += named.name + ": " +
                  (r.halted ? "halts in " + std::to_string(r.steps) : "runs past " + std::to_string(bound)) + "\n";
      }
      if (!report.empty()) report.pop_back();
      return ok(report);
    };
  });
}

// --- family and demos ------------------------------------------------------

struct FamilyArgs {
  std::string pred = "even";
  std::string cuts;
  std::size_t k = 2;
  std::size_t i = 0;
  std::string set = "1,3,5";
  std::size_t n = 8;
};

FamilyArgs& family_args() {
  static FamilyArgs args;
  return args;
}

void add_family_options(CLI::App* sub) {
  auto& f = family_args();
  sub->add_option("--pred", f.pred, "even, odd, prime, all, none, a bitmask file, or bitmask:0101...")
      ->capture_default_str();
  sub->add_option("--cuts", f.cuts, "strictly increasing, comma separated (default 2,4,8,...)");
}

CommandResult atoms_result(bool demo) {
  const auto& f = family_args();
  const auto raw = parse_list(f.set);
  const std::vector<Element> members(raw.begin(), raw.end());
  const auto atoms = star_atoms(members, f.n);
  const Partition p = atoms_to_singular(members, f.n);
  std::string report;
  if (demo) report += "Claim: the partition lattice is atomistic, so joining star atoms yields any singular partition.\n";
  for (const auto& atom : atoms) report += "atom: " + std::to_string(atom.low) + " " + std::to_string(atom.high) + "\n";
  report += "result: " + std::to_string(p.class_count()) + " classes, big class " + set_text(non_singleton_class(p));
  if (!demo) return ok(report, format_partition(p));
  std::vector<Element> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const bool same = p == Partition::singular(f.n, sorted);
  const bool below = std::all_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return leq(a.to_partition(), p); });
  report += std::string("\ncheck singular with class ") + set_text(sorted) + ": " + pass_fail(same && is_singular(p));
  report += std::string("\ncheck every atom below the result: ") + pass_fail(below);
  return checked(same && below && is_singular(p), report, format_partition(p));
}

CommandResult family_meet_result(bool demo) {
  const auto& f = family_args();
  const SingularFamilySpec spec = load_family(f.pred, f.cuts, f.k);
  const SmallEq result = truncated_family_meet(spec, f.k);
  std::string report;
  if (demo) {
    report += "Claim: a family of small singular equivalences can meet to a singular equivalence with any class I.\n";
    for (std::size_t i = 0; i <= f.k; ++i) {
      report += "member " + std::to_string(i) + ": " + small_eq_summary(family_member(spec, i)) + "\n";
    }
  }
  report += "meet of members 0.." + std::to_string(f.k) + ": " + small_eq_summary(result);
  if (!demo) return ok(report, format_small_eq(result));
  const bool closed = result == family_closed_form(spec, f.k);
  const std::size_t span = static_cast<std::size_t>(spec.cuts[f.k]) + 8;
  std::vector<Element> expected;
  for (std::size_t x = 0; x < span; ++x) {
    if (x >= spec.cuts[f.k] || spec.predicate(x)) expected.push_back(x);
  }
  const bool restricted = smalleq_restrict(result, span) == Partition::singular(span, expected);
  report += std::string("\ncheck equals (I ∩ [0, f_K)) ∪ ↑f_K: ") + pass_fail(closed);
  report += "\ncheck restriction to " + std::to_string(span) + " against the predicate scan: " + pass_fail(restricted);
  return checked(closed && restricted, report, format_small_eq(result));
}

void add_family(CLI::App& app, Action& action) {
  auto* group = app.add_subcommand("family", "truncated singular families and atom joins");
  group->require_subcommand(1);
  auto& f = family_args();

  auto* meet_cmd = group->add_subcommand("meet", "meet of family members 0..K");
  add_family_options(meet_cmd);
  meet_cmd->add_option("--k", f.k)->capture_default_str();
  meet_cmd->callback([&action] { action = [] { return family_meet_result(false); }; });

  auto* member = group->add_subcommand("member", "family member i: (I ∩ [0, f_i)) ∪ ↑f_i");
  add_family_options(member);
  member->add_option("--i", f.i)->capture_default_str();
  member->callback([&action] {
    action = [] {
      const auto& a = family_args();
      const SingularFamilySpec spec = load_family(a.pred, a.cuts, a.i);
      const SmallEq e = family_member(spec, a.i);
      return ok("member " + std::to_string(a.i) + ": " + small_eq_summary(e), format_small_eq(e));
    };
  });

  auto* atoms = group->add_subcommand("atoms", "join of star atoms over a set");
  atoms->add_option("--set", f.set, "comma separated, at least two elements")->capture_default_str();
  atoms->add_option("--n", f.n, "universe size")->capture_default_str();
  atoms->callback([&action] { action = [] { return atoms_result(false); }; });
}

namespace demo_args {
std::string machine = "incrementer";
std::string input = "11";
std::size_t bound = 50;
std::size_t k = 8;

void reset() {
  machine = "incrementer";
  input = "11";
  bound = 50;
  k = 8;
}
}  // namespace demo_args

void add_demo(CLI::App& app, Action& action) {
  using namespace demo_args;
  auto* group = app.add_subcommand("demo", "self-checking demonstrations of each construction");
  group->require_subcommand(1);
  auto& f = family_args();

  auto* undecidable = group->add_subcommand("join-undecidable", "halting as a join of two cheap equivalences");
  undecidable->add_option("--machine", machine)->capture_default_str();
  undecidable->add_option("--input", input)->capture_default_str();
  undecidable->add_option("--bound", bound)->capture_default_str();
  undecidable->callback([&action] {
    action = [] {
      const TmSpec m = checks::load_machine(machine);
      const ClockedMachine cm(m);
      const Configuration init = initial_configuration(m, input);
      const ProbeBounds b = probe_bounds(cm, init, bound);
      std::string report =
          "Claim: two equivalences decidable in logarithmic space can have an undecidable join; a machine halts\n"
          "iff its clocked start point is joined to the sink.\n";
      report += "start point " + to_string(cm.pack(0, init)) + " = pack(0, " +
                to_string(encode_configuration(m, init)) + "), sink 0\n";
      report += "universe bound " + to_string(b.universe_bound) + ", chain bound " + std::to_string(b.chain_bound) + "\n";
      const ProbeResult probe = halting_probe(m, input, bound);
      const SimulationResult sim = simulate(m, init, bound);
      const auto* h = std::get_if<HaltsInSteps>(&probe);
      report += h ? "probe: HaltsInSteps " + std::to_string(h->steps) + "\n" : "probe: NoHaltWithinBound\n";
      report += sim.halted ? "simulation: halts after " + std::to_string(sim.steps) + " steps\n"
                           : "simulation: running after " + std::to_string(bound) + " steps\n";
      bool passed = (h != nullptr) == sim.halted;
      report += std::string("check verdict matches simulation: ") + pass_fail(passed);
      if (h && sim.halted) {
        const bool steps = h->steps == sim.steps;
        const bool verified = verify_chain(approx_even(cm), approx_odd(cm), h->chain);
        report += std::string("\ncheck halt step matches: ") + pass_fail(steps);
        report += std::string("\ncheck chain verifies link by link: ") + pass_fail(verified);
        report += "\nchain: " + chain_text(h->chain);
        passed = passed && steps && verified;
      }
      return checked(passed, report);
    };
  });

  auto* growth = group->add_subcommand("automatic-meet-growth", "finite meets of automatic singletons");
  growth->add_option("--k", k)->capture_default_str();
  growth->callback([&action] {
    action = [] {
      std::string report =
          "Claim: automatic equivalences are not closed under infinite meets; the meet of all singleton relations\n"
          "is the identity, yet every finite meet stays automatic with one more class.\n";
      const auto counts = family_meet_demo(k);
      bool passed = counts.size() == k;
      for (std::size_t j = 1; j <= counts.size(); ++j) {
        const bool good = counts[j - 1] == j + 1;
        passed = passed && good;
        report += "k=" + std::to_string(j) + ": " + std::to_string(counts[j - 1]) + " classes (" + pass_fail(good) + ")\n";
      }
      report += std::string("check counts are 2..") + std::to_string(k + 1) + ": " + pass_fail(passed);
      return checked(passed, report);
    };
  });

  auto* family = group->add_subcommand("family-meet", "small singular family meeting to a chosen class");
  add_family_options(family);
  family->add_option("--k", f.k)->capture_default_str();
  family->callback([&action] { action = [] { return family_meet_result(true); }; });

  auto* nonhalt = group->add_subcommand("nonhalt-meet", "meet of the not-halting-within-n relations over the zoo");
  nonhalt->add_option("--k", k)->capture_default_str();
  nonhalt->callback([&action] {
    action = [] {
      std::string report =
          "Claim: each relation \"does not halt within n steps\" is decidable, but their meet isolates the\n"
          "machines that never halt.\n";
      const auto zoo = checks::load_zoo();
      std::vector<Natural> codes;
      std::vector<Element> running;
      for (std::size_t i = 0; i < zoo.size(); ++i) {
        codes.push_back(machine_code(zoo[i].spec));
        if (!simulate(zoo[i].spec, initial_configuration(zoo[i].spec, ""), k).halted) running.push_back(i);
      }
      const Partition p = nonhalt_family_meet(k, codes);
      std::vector<Element> big = non_singleton_class(p);
      if (big.empty() && running.size() == 1) big = running;  // a lone runner is a singleton class
      std::string names;
      for (Element i : big) names += (names.empty() ? "" : ", ") + zoo[i].name;
      report += "meet over n=1.." + std::to_string(k) + ": big class {" + names + "}\n";
      const bool passed = p == Partition::singular(zoo.size(), running);
      report += std::string("check equals machines running past ") + std::to_string(k) + " steps: " + pass_fail(passed);
      return checked(passed, report, format_partition(p));
    };
  });

  auto* atoms = group->add_subcommand("atoms", "star atoms joining to a singular partition");
  atoms->add_option("--set", f.set)->capture_default_str();
  atoms->add_option("--n", f.n)->capture_default_str();
  atoms->callback([&action] { action = [] { return atoms_result(true); }; });
}

// --- verify ----------------------------------------------------------------

namespace verify_args {
std::string suite;
std::vector<std::string> files;
std::string fault;
std::uint64_t seed = checks::SuiteOptions{}.seed;

void reset() {
  suite = std::string{};
  files = std::vector<std::string>{};
  fault = std::string{};
  seed = checks::SuiteOptions{}.seed;
}
}  // namespace verify_args

void add_verify(CLI::App& app, Action& action) {
  using namespace verify_args;
  auto* verify = app.add_subcommand("verify", "run a verification suite, or `verify complement A B`");
  verify->add_option("suite", suite, "lattice, complements, automatic, tm, constructions, all, or complement")
      ->required();
  verify->add_option("files", files, "two partition files for `complement`");
  verify->add_option("--inject-fault", fault, "negative control: join, meet or complement");
  verify->add_option("--seed", seed)->capture_default_str();
  verify->callback([&action] {
    action = [] {
      if (suite == "complement") {
        if (files.size() != 2) throw Error(ErrorKind::kInvalidArgument, "verify complement needs two partition files");
        const Partition e = load_partition(files[0]);
        const Partition f = load_partition(files[1]);
        same_universe(e, f);
        const bool passed = is_complement(e, f);
        return checked(passed, std::string("complement: ") + pass_fail(passed));
      }
      if (!files.empty()) throw Error(ErrorKind::kInvalidArgument, "suite `" + suite + "` takes no files");
      checks::SuiteOptions options;
      options.seed = seed;
      if (!fault.empty()) options.ops = checks::with_fault(options.ops, fault);
      std::string report;
      bool passed = true;
      for (const auto& r : checks::run_suites(suite, options)) {
        report += checks::format_report(r);
        passed = passed && r.passed();
      }
      report += passed ? "ALL PASSED" : "SOME CHECKS FAILED";
      return checked(passed, report);
    };
  });
}

void reset_static_state() {
  family_args() = FamilyArgs{};
  partition_args::reset();
  automatic_args::reset();
  decider_args::reset();
  tm_args::reset();
  demo_args::reset();
  verify_args::reset();
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  reset_static_state();
  CLI::App app{"Equivalence-relation lattices: partitions, automatic relations, deciders and Turing machines", "equlat"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the command's output (or its report) to FILE");
  Action action;
  add_partition(app, action);
  add_automatic(app, action);
  add_decider(app, action);
  add_tm(app, action);
  add_family(app, action);
  add_demo(app, action);
  add_verify(app, action);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitBadInput, out.str() + err.str(), std::nullopt};
  }

  CommandResult result;
  try {
    result = action();
    if (!out_path.empty()) {
      write_text_file(out_path, result.output ? *result.output : result.report + "\n");
      if (result.output) result.report += "\nwrote " + out_path;
      result.output.reset();
    }
  } catch (const Error& e) {
    result = {kExitBadInput, std::string("error (") + std::string(to_string(e.kind())) + "): " + e.what(), std::nullopt};
  } catch (const std::exception& e) {
    result = {kExitBadInput, std::string("error: ") + e.what(), std::nullopt};
  }
  return result;
}

}  // namespace equlat::cli
