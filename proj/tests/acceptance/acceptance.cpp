// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "equlat/checks/suites.hpp"
#include "equlat/checks/zoo.hpp"

namespace {

using equlat::checks::CheckOutcome;

// Pinned limits. Every comparison is exact, so the only slack is time.
constexpr double kLatticeSeconds = 10.0;
constexpr double kProbeSeconds = 60.0;
constexpr std::size_t kMinCorpus = 8;
constexpr std::size_t kMinZoo = 10;
constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
  bool passed = false;
  std::string detail;
};

Verdict from(const CheckOutcome& c) { return {c.passed, c.detail}; }

Verdict both(const CheckOutcome& a, const CheckOutcome& b) {
  return {a.passed && b.passed, a.name + ": " + a.detail + "; " + b.name + ": " + b.detail};
}

Verdict within(Verdict v, double seconds, double limit) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %.2f s of %.0f s allowed", seconds, limit);
  v.detail += buf;
  if (seconds >= limit) v.passed = false;
  return v;
}

struct Criterion {
  const char* title;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  using namespace equlat::checks;
  const LatticeOps ops = LatticeOps::standard();

  const std::vector<Criterion> criteria = {
      {"lattice axioms, n <= 5 exhaustive and 10^4 random at n = 10",
       [&] {
         const auto c = check_lattice_axioms(ops, 5, 10, 10000, kSeed);
         return within(from(c), c.seconds, kLatticeSeconds);
       }},
      {"union-find join equals chain closure, n <= 5", [&] { return from(check_join_chain_oracle(ops, 5)); }},
      {"singular complement test agrees with is_complement, n <= 5", [&] { return from(check_singular_complement(ops, 5)); }},
      {"least-element complement is a complement, n <= 7 and random at 6, 7, 12",
       [&] { return from(check_least_element_complement(ops, 7, {6, 7, 12}, 10000, kSeed)); }},
      {"class count <= states, axiom checkers agree with brute force below 64",
       [&] {
         const auto corpus = load_automatic_corpus();
         Verdict v = from(check_class_bound_and_checkers(corpus, non_equivalence_dfas(), 64));
         v.detail += "; corpus " + std::to_string(corpus.size());
         if (corpus.size() < kMinCorpus) v.passed = false;
         return v;
       }},
      {"automaton meet and join commute with restriction to {0..63}",
       [&] { return from(check_automatic_restriction(ops, load_automatic_corpus(), 64)); }},
      {"folded singleton meets have k+1 classes, k <= 16", [&] { return from(check_meet_growth(16)); }},
      {"halting probe matches simulation at bound 1000",
       [&] {
         const auto zoo = load_zoo();
         const auto c = check_halting_probe(zoo, 1000);
         Verdict v = within(from(c), c.seconds, kProbeSeconds);
         v.detail += "; zoo " + std::to_string(zoo.size());
         if (zoo.size() < kMinZoo) v.passed = false;
         return v;
       }},
      {"family meet closed form for K <= 6, atoms on 10^3 random sets",
       [&] { return both(check_family_meet(6, kSeed), check_atoms_to_singular(1000, 10, kSeed)); }},
      {"nonhalt family meet at K = 1, 10, 100", [&] { return from(check_nonhalt_family(load_zoo(), {1, 10, 100})); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    if (!v.passed) ++failed;
    std::printf("%s  %2zu  %s  (%s)\n", v.passed ? "PASS" : "FAIL", i + 1, criteria[i].title, v.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
