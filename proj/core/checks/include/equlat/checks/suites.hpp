#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "equlat/checks/zoo.hpp"
#include "equlat/partition.hpp"

namespace equlat::checks {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;  // what was covered, or the first counterexample
  double seconds = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckOutcome> checks;

  bool passed() const;
};

// The partition operations under test. Checks compare these against
// oracles, so a fault swapped in here must make some check fail.
struct LatticeOps {
  std::function<Partition(const Partition&, const Partition&)> meet;
  std::function<Partition(const Partition&, const Partition&)> join;
  std::function<Partition(const Partition&)> complement;

  static LatticeOps standard();
};

// join: ignores its second argument. meet: returns its first argument.
// complement: returns its argument.
std::vector<std::string> fault_names();
LatticeOps with_fault(LatticeOps ops, const std::string& fault);

// --- Individual checks ---------------------------------------------------

// Idempotence, commutativity, associativity, absorption and
// leq ⇔ meet = E ⇔ join = F, on all partitions for n ≤ exhaustive_n and on
// random triples at n = random_n.
CheckOutcome check_lattice_axioms(const LatticeOps& ops, std::size_t exhaustive_n, std::size_t random_n,
                                  std::size_t random_cases, std::uint64_t seed);
CheckOutcome check_join_chain_oracle(const LatticeOps& ops, std::size_t max_n);
CheckOutcome check_atomistic(const LatticeOps& ops, std::size_t max_n);
CheckOutcome check_smalleq_meet(const LatticeOps& ops, std::size_t cases, std::uint64_t seed);
CheckOutcome check_decider_combinators(const LatticeOps& ops, std::size_t cases, std::uint64_t seed);

CheckOutcome check_singular_complement(const LatticeOps& ops, std::size_t max_n);
CheckOutcome check_least_element_complement(const LatticeOps& ops, std::size_t exhaustive_n, const std::vector<std::size_t>& random_ns,
                            std::size_t random_cases, std::uint64_t seed);

// Class count ≤ minimized state count, and the exact axiom checkers agree
// with brute force over {0..bound-1} on the corpus and on non-equivalences.
CheckOutcome check_class_bound_and_checkers(const std::vector<NamedRelation>& corpus,
                                      const std::vector<NamedDfa>& non_equivalences, std::size_t bound);
// Automaton meet and join against partition meet and join on {0..n-1}, all
// ordered corpus pairs; joins compare at the analysed cutoff first.
CheckOutcome check_automatic_restriction(const LatticeOps& ops, const std::vector<NamedRelation>& corpus,
                                         std::size_t n);
CheckOutcome check_meet_growth(std::size_t max_k);
CheckOutcome check_coarsen(const std::vector<NamedRelation>& corpus);
CheckOutcome check_representatives(const std::vector<NamedRelation>& corpus);
CheckOutcome check_corpus_builtins(const std::vector<NamedRelation>& corpus);

// Probe verdict and halt step against simulation; chains re-verified.
// Requires ≥ 10 machines, ≥ 3 halting and ≥ 3 running past the bound.
CheckOutcome check_halting_probe(const std::vector<NamedMachine>& zoo, std::size_t bound);
CheckOutcome check_approx_closure(const std::vector<NamedMachine>& zoo, std::size_t steps);
CheckOutcome check_pack_roundtrip(const std::vector<NamedMachine>& zoo);
CheckOutcome check_nonhalt_family(const std::vector<NamedMachine>& zoo, const std::vector<std::size_t>& ks);
CheckOutcome check_nonhalt_monotone(const std::vector<NamedMachine>& zoo, std::size_t max_n);

// Predicates even, prime and a seeded bitmask; cuts 2^(i+1), 3(i+1) and
// 1,2,3,5,8,13,21; every K ≤ max_k.
CheckOutcome check_family_meet(std::size_t max_k, std::uint64_t seed);
CheckOutcome check_atoms_to_singular(std::size_t cases, std::size_t max_n, std::uint64_t seed);

// --- Suites --------------------------------------------------------------

struct SuiteOptions {
  LatticeOps ops = LatticeOps::standard();
  std::uint64_t seed = 20240601;
};

std::vector<std::string> suite_names();  // lattice, complements, automatic, tm, constructions
// Throws kInvalidArgument for unknown names; "all" is handled by run_suites.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& options);

std::string format_outcome(const CheckOutcome& outcome);
std::string format_report(const SuiteReport& report);

}  // namespace equlat::checks
