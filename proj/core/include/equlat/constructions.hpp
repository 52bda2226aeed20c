#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "equlat/partition.hpp"
#include "equlat/predicates.hpp"
#include "equlat/small_eq.hpp"

namespace equlat {

// Target set I (by predicate) and strictly increasing cuts f_0 < f_1 < ...
// The predicate is only queried below the cut in use.
struct SingularFamilySpec {
  Predicate predicate;
  std::vector<std::uint64_t> cuts;
};

// f_i = 2^(i+1), i < count.
std::vector<std::uint64_t> default_cuts(std::size_t count);

// Throws kInvalidArgument unless cuts are non-empty and strictly increasing.
void validate(const SingularFamilySpec& spec);

// Singular small equivalence with big class (I ∩ [0, f_i)) ∪ ↑f_i.
SmallEq family_member(const SingularFamilySpec& spec, std::size_t i);

// Meet of family_member(spec, 0..k).
SmallEq truncated_family_meet(const SingularFamilySpec& spec, std::size_t k);

// What the meet must equal: (I ∩ [0, f_k)) ∪ ↑f_k, built directly.
SmallEq family_closed_form(const SingularFamilySpec& spec, std::size_t k);

// Join of the atoms (min I, x), x ∈ I ∖ {min I}, on {0..n-1}. Requires
// I ⊆ {0..n-1} with at least two elements.
Partition atoms_to_singular(std::span<const Element> members, std::size_t n);
std::vector<Atom> star_atoms(std::span<const Element> members, std::size_t n);

}  // namespace equlat
