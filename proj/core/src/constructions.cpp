#include "equlat/constructions.hpp"

#include <algorithm>
#include <set>

#include "equlat/error.hpp"

namespace equlat {

std::vector<std::uint64_t> default_cuts(std::size_t count) {
  if (count > 63) throw Error(ErrorKind::kOverflow, "default cuts past 2^63");
  std::vector<std::uint64_t> cuts;
  for (std::size_t i = 0; i < count; ++i) cuts.push_back(std::uint64_t{2} << i);
  return cuts;
}

void validate(const SingularFamilySpec& spec) {
  if (!spec.predicate) throw Error(ErrorKind::kInvalidArgument, "family without a predicate");
  if (spec.cuts.empty()) throw Error(ErrorKind::kInvalidArgument, "family without cuts");
  for (std::size_t i = 1; i < spec.cuts.size(); ++i) {
    if (spec.cuts[i] <= spec.cuts[i - 1]) throw Error(ErrorKind::kInvalidArgument, "cuts must strictly increase");
  }
}

namespace {

std::size_t cut_at(const SingularFamilySpec& spec, std::size_t i) {
  validate(spec);
  if (i >= spec.cuts.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "family index " + std::to_string(i) + " needs more than " + std::to_string(spec.cuts.size()) + " cuts");
  }
  return static_cast<std::size_t>(spec.cuts[i]);
}

}  // namespace

SmallEq family_member(const SingularFamilySpec& spec, std::size_t i) {
  const std::size_t cut = cut_at(spec, i);
  std::vector<Element> members;
  for (std::size_t x = 0; x < cut; ++x) {
    if (spec.predicate(x)) members.push_back(x);
  }
  return SmallEq::singular_upper(cut, members);
}

SmallEq truncated_family_meet(const SingularFamilySpec& spec, std::size_t k) {
  SmallEq result = family_member(spec, 0);
  for (std::size_t i = 1; i <= k; ++i) result = smalleq_meet(result, family_member(spec, i));
  return result;
}

SmallEq family_closed_form(const SingularFamilySpec& spec, std::size_t k) {
  const std::size_t cut = cut_at(spec, k);
  std::vector<Element> members;
  for (std::size_t x = 0; x < cut; ++x) {
    if (spec.predicate(x)) members.push_back(x);
  }
  return SmallEq::singular_upper(cut, members);
}

std::vector<Atom> star_atoms(std::span<const Element> members, std::size_t n) {
  const std::set<Element> set(members.begin(), members.end());
  if (set.size() < 2) throw Error(ErrorKind::kInvalidArgument, "atoms_to_singular needs at least two elements");
  if (*set.rbegin() >= n) throw Error(ErrorKind::kInvalidArgument, "element outside the universe");
  std::vector<Atom> atoms;
  for (auto it = std::next(set.begin()); it != set.end(); ++it) atoms.push_back(Atom::make(*set.begin(), *it, n));
  return atoms;
}

Partition atoms_to_singular(std::span<const Element> members, std::size_t n) {
  return join_atoms(star_atoms(members, n), n);
}

}  // namespace equlat
