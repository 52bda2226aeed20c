#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "equlat/dfa.hpp"
#include "equlat/partition.hpp"

namespace equlat {

// Canonical binary representation: no leading zeros, binrep(0) == "0".
std::string binrep(std::uint64_t n);
Word binrep_word(std::uint64_t n);
// binrep(m) □ binrep(n)
Word pair_word(std::uint64_t m, std::uint64_t n);
// Inverse of binrep_word for canonical bit words; kOverflow past 64 bits.
std::uint64_t binrep_value(std::span<const Symbol> bits);

// Canonical binreps over {0,1} (□ rejected).
Dfa canonical_binrep_dfa();
// The input convention of automatic relations: canonical □ canonical.
Dfa pair_format_dfa();

// --- Axiom checkers on raw automata -------------------------------------

// L(d) ⊆ pair_format_dfa().
bool check_format(const Dfa& d);

// w□w ∈ L(d) for every canonical binrep w, decided over the finite monoid
// of transition functions g_w.
bool check_reflexive(const Dfa& d);

// Unsound fast path: tests only m < bound.
bool check_reflexive_sampled(const Dfa& d, std::uint64_t bound);

// The swapped language {v□w : w□v ∈ L(d)}, built as an NFA from the pre-□
// states and determinized. Requires check_format(d).
Dfa swap_language(const Dfa& d);
bool check_symmetric(const Dfa& d);

// For canonical-reachable pre-□ states s, s': if some n reaching s' is
// accepted after s□, then everything accepted after s'□ must be accepted
// after s□. Exact for any relation in pair format; for reflexive symmetric
// ones it says s□ and s'□ accept the same language.
bool check_transitive(const Dfa& d);

enum class ReflexivityMode { kExact, kUnsoundFast };

struct AxiomReport {
  bool format = false;
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;

  bool all() const { return format && reflexive && symmetric && transitive; }
  std::string failures() const;
};

// Checks run in order; later checks are skipped (false) once the format fails.
AxiomReport check_axioms(const Dfa& d, ReflexivityMode mode = ReflexivityMode::kExact,
                         std::uint64_t sample_bound = 1024);

// --- Builders ----------------------------------------------------------

// A deterministic Moore machine over bits: every state carries a label. It
// classifies canonical binreps; the label of a number is the label of the
// state reached after reading its binrep.
struct BitClassifier {
  std::size_t state_count = 0;
  StateId start = 0;
  std::vector<StateId> next;  // next[state * 2 + bit]
  std::vector<std::uint32_t> label;

  StateId run(std::uint64_t value) const;
};

// Automaton for {binrep(m) □ binrep(n) : related(label(m), label(n))},
// minimized. With `related` = equality this is the kernel of the classifier.
Dfa label_relation_dfa(const BitClassifier& c, const std::function<bool(std::uint32_t, std::uint32_t)>& related);
Dfa kernel_dfa(const BitClassifier& c);

namespace classifiers {
BitClassifier constant();                     // one class
BitClassifier value_mod(std::uint32_t k);     // m mod k
BitClassifier length_capped(std::uint32_t k); // min(|binrep(m)|, k)
BitClassifier equals(std::uint64_t i);        // m == i
BitClassifier popcount_parity();              // number of 1 bits mod 2
}  // namespace classifiers

// --- Automatic equivalence relations ------------------------------------

// A validated automatic equivalence: the DFA (kept minimized) accepts
// exactly {binrep(m) □ binrep(n) : m ~ n}. Classes are indexed by their
// representative, the numerically least member, in ascending order.
class AutomaticEq {
 public:
  // Throws kNotEquivalence naming the failed axioms.
  static AutomaticEq from_dfa(const Dfa& d, ReflexivityMode mode = ReflexivityMode::kExact);

  // For automata that are equivalences by construction (meets, joins,
  // kernels). Skips the axiom checks.
  static AutomaticEq from_trusted_dfa(const Dfa& d);

  const Dfa& dfa() const noexcept { return dfa_; }

  bool decide(std::uint64_t m, std::uint64_t n) const;

  std::size_t class_count() const noexcept { return representatives_.size(); }
  std::span<const std::uint64_t> representatives() const noexcept { return representatives_; }
  std::size_t class_index(std::uint64_t m) const;

  static constexpr std::uint32_t kNoClass = 0xffffffffu;

  // Class of the numbers whose binrep leads from the start to `q`, or
  // kNoClass when no canonical binrep reaches `q`.
  std::uint32_t pre_state_class(StateId q) const { return pre_state_class_[q]; }

  // State q_m reached after binrep(m) □ for any m in the class.
  StateId post_separator_state(std::size_t class_index) const { return class_post_state_[class_index]; }

  // Explicit partition of {0..n-1}.
  Partition restrict(std::size_t n) const;

 private:
  explicit AutomaticEq(Dfa minimal);

  Dfa dfa_;
  std::vector<std::uint64_t> representatives_;
  std::vector<StateId> class_post_state_;
  std::vector<std::uint32_t> pre_state_class_;
};

AutomaticEq meet(const AutomaticEq& a, const AutomaticEq& b);

// The bipartite intersection graph behind a join: class i of `a` is adjacent
// to class j of `b` iff they share a member; `witness` is the least shared
// member.
struct JoinAnalysis {
  struct Edge {
    std::size_t a_class = 0;
    std::size_t b_class = 0;
    std::uint64_t witness = 0;
  };
  std::vector<Edge> edges;
  // Connected component of each class of `a`, numbered by first appearance.
  std::vector<std::size_t> a_component;
  std::vector<std::size_t> b_component;
  std::size_t component_count = 0;

  // Smallest N such that every representative and witness lies below N;
  // restricting both relations to {0..N-1} loses no join connection.
  std::uint64_t restriction_cutoff = 0;
};

JoinAnalysis analyze_join(const AutomaticEq& a, const AutomaticEq& b);
AutomaticEq join(const AutomaticEq& a, const AutomaticEq& b);

// `grouping` is a partition of the class indices of `a`; the result merges
// each block into one class.
AutomaticEq coarsen(const AutomaticEq& a, const Partition& grouping);

// The two-class relation {i} | N∖{i}.
AutomaticEq singleton_family(std::uint64_t i);

// Class counts of meet(singleton_family(1), ..., singleton_family(j)) for
// j = 1..k.
std::vector<std::size_t> family_meet_demo(std::size_t k);

AutomaticEq top_relation();

}  // namespace equlat
