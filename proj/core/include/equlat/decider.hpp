#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "equlat/natural.hpp"
#include "equlat/partition.hpp"

namespace equlat {

// Members of x's class found by a relation-specific enumerator, all below a
// bound and distinct from x. `complete` is false when the class may hold
// further members below the bound that were not listed.
struct ClassMembers {
  std::vector<Natural> members;
  bool complete = true;
};

// An equivalence relation given by a total decision procedure. The cost
// note is free-text resource metadata; it is not enforced.
class DeciderEq {
 public:
  using Procedure = std::function<bool(const Natural&, const Natural&)>;
  using Enumerator = std::function<ClassMembers(const Natural& x, const Natural& bound)>;

  static constexpr std::size_t kDefaultCheckBound = 32;

  // Checks the equivalence axioms on {0..check_bound-1}; throws
  // kNotEquivalence naming the failed axiom.
  static DeciderEq make(std::string name, Procedure decide, std::string cost_note,
                        std::size_t check_bound = kDefaultCheckBound);

  // No registration check; for relations that are equivalences by
  // construction and expensive to sample.
  static DeciderEq make_unchecked(std::string name, Procedure decide, std::string cost_note);

  DeciderEq with_enumerator(Enumerator enumerate) const;
  DeciderEq with_universe_hint(Natural hint) const;

  bool decide(const Natural& m, const Natural& n) const { return (*decide_)(m, n); }
  bool operator()(const Natural& m, const Natural& n) const { return decide(m, n); }

  const std::string& name() const noexcept { return name_; }
  const std::string& cost_note() const noexcept { return cost_note_; }
  const std::optional<Natural>& universe_hint() const noexcept { return universe_hint_; }
  const Enumerator* enumerator() const noexcept { return enumerate_ ? enumerate_.get() : nullptr; }
  const Procedure& procedure() const noexcept { return *decide_; }

 private:
  DeciderEq(std::string name, Procedure decide, std::string cost_note);

  std::string name_;
  std::shared_ptr<const Procedure> decide_;
  std::string cost_note_;
  std::optional<Natural> universe_hint_;
  std::shared_ptr<const Enumerator> enumerate_;
};

// Reflexivity, symmetry and transitivity over {0..bound-1}^3.
bool is_equivalence_sampled(const DeciderEq::Procedure& decide, std::size_t bound);
bool is_equivalence_sampled(const DeciderEq& d, std::size_t bound);

// Names the first failed axiom on {0..bound-1}, or nothing.
std::optional<std::string> first_axiom_violation(const DeciderEq::Procedure& decide, std::size_t bound);

Partition restrict(const DeciderEq& d, std::size_t n);
// Partition of the index set of `points` induced by d.
Partition restrict_to(const DeciderEq& d, std::span<const Natural> points);

DeciderEq bottom_decider();
DeciderEq top_decider();
DeciderEq parity_decider();
// Agrees with `p` on its universe, singletons outside it.
DeciderEq partition_decider(const Partition& p, std::string name = "partition");

// m ~ n iff m == n or (p(m) and p(n)).
DeciderEq singular_from_predicate(std::string name, std::function<bool(const Natural&)> p,
                                  std::string cost_note = "cost of the predicate");

DeciderEq meet_combinator(const DeciderEq& a, const DeciderEq& b);

// The singular relation whose big class is the set of least elements of
// d's classes, decided by the four-step procedure: accept equal inputs,
// reject when either input has a smaller d-equivalent, accept otherwise.
DeciderEq least_element_complement(const DeciderEq& d);

// --- Bounded join search -------------------------------------------------

enum class JoinSide { kFirst, kSecond };

// m = chain[0] ~ chain[1] ~ ... ~ chain.back() = n, link i witnessed by
// via[i]; consecutive links alternate sides.
struct RelatedWitness {
  std::vector<Natural> chain;
  std::vector<JoinSide> via;

  std::size_t links() const noexcept { return via.size(); }
};

// No chain within the bounds. This is not a proof that m and n are
// unrelated; `exhaustive` is false when some class could not be enumerated
// below the universe bound and the search skipped it.
struct NotWithinBounds {
  std::size_t explored = 0;
  bool exhaustive = true;
};

using JoinSearch = std::variant<RelatedWitness, NotWithinBounds>;

// Largest universe scanned value-by-value when a relation has no complete
// class enumerator.
inline constexpr std::uint64_t kJoinScanLimit = std::uint64_t{1} << 16;

// Breadth-first search for an alternating chain from m to n whose values
// are all below `universe_bound` and whose length is at most `chain_bound`
// links. Requires m, n < universe_bound.
JoinSearch bounded_join(const DeciderEq& first, const DeciderEq& second, const Natural& m, const Natural& n,
                        const Natural& universe_bound, std::size_t chain_bound);

// Re-checks every link of a chain against the relation it names.
bool verify_chain(const DeciderEq& first, const DeciderEq& second, const RelatedWitness& witness);

}  // namespace equlat
