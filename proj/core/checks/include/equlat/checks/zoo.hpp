#pragma once

#include <string>
#include <vector>

#include "equlat/automatic.hpp"
#include "equlat/dfa.hpp"
#include "equlat/tm.hpp"

namespace equlat::checks {

// $EQULAT_DATA_DIR when set, else the source tree's data/ directory.
std::string data_dir();

struct NamedMachine {
  std::string name;
  TmSpec spec;
};

// Every *.tm file in `dir`, sorted by name (file stem).
std::vector<NamedMachine> load_zoo(const std::string& dir);
std::vector<NamedMachine> load_zoo();

// A path to a .tm file, or the name of a zoo machine.
TmSpec load_machine(const std::string& name_or_path);

struct NamedRelation {
  std::string name;
  AutomaticEq relation;
};

// Every *.dfa file in `dir`, validated with the exact axiom checks.
std::vector<NamedRelation> load_automatic_corpus(const std::string& dir);
std::vector<NamedRelation> load_automatic_corpus();

// Built-in automatic relations: top, parity, mod3, mod4, len-cap-2,
// len-cap-3, len-cap-4, singleton-3, singleton-5, popcount-parity.
std::vector<std::string> builtin_relation_names();
Dfa builtin_relation_dfa(const std::string& name);

struct NamedDfa {
  std::string name;
  Dfa dfa;
};

// Format-respecting automata that are not equivalences:
//   length-parity-differs   irreflexive
//   length-below            min(|m|,3) < min(|n|,3), asymmetric
//   low-bits-overlap        m ≡ n mod 4 or m & n & 3 ≠ 0, not transitive
std::vector<NamedDfa> non_equivalence_dfas();

}  // namespace equlat::checks
