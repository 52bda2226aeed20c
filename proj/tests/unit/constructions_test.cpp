#include <gtest/gtest.h>

#include <random>

#include "equlat/checks/oracles.hpp"
#include "equlat/constructions.hpp"
#include "equlat/error.hpp"
#include "equlat/predicates.hpp"
#include "support.hpp"

namespace equlat {
namespace {

SingularFamilySpec evens(std::vector<std::uint64_t> cuts = {2, 4, 8}) { return {named_predicate("even"), cuts}; }

TEST(Predicates, Builtins) {
  EXPECT_TRUE(named_predicate("even")(4));
  EXPECT_FALSE(named_predicate("prime")(9));
  EXPECT_TRUE(named_predicate("prime")(13));
  EXPECT_THROW(named_predicate("nope"), Error);
  const Predicate mask = bitmask_predicate("01 10");
  EXPECT_TRUE(mask(1));
  EXPECT_FALSE(mask(3));
  EXPECT_THROW(mask(4), Error);
  EXPECT_THROW(bitmask_predicate("012"), Error);
}

TEST(Family, DefaultCuts) {
  EXPECT_EQ(default_cuts(4), (std::vector<std::uint64_t>{2, 4, 8, 16}));
  EXPECT_THROW(default_cuts(64), Error);
}

TEST(Family, Validation) {
  EXPECT_THROW(validate(evens({2, 2, 8})), Error);
  EXPECT_THROW(validate(evens({})), Error);
  EXPECT_THROW(family_member(evens(), 3), Error);
}

TEST(Family, MemberExamples) {
  const SmallEq m0 = family_member(evens(), 0);
  EXPECT_EQ(m0.threshold(), 2u);
  EXPECT_EQ(m0.tail_head_members(), std::vector<Element>{0});
  EXPECT_TRUE(m0.related(0, 2));
  EXPECT_FALSE(m0.related(0, 1));
  for (std::size_t i = 0; i < 3; ++i) {
    const SmallEq m = family_member(evens(), i);
    const std::size_t f = evens().cuts[i];
    EXPECT_TRUE(is_singular(smalleq_restrict(m, f + 1)));
    std::vector<Element> scan;
    for (Element x = 0; x < f; x += 2) scan.push_back(x);
    EXPECT_EQ(m.tail_head_members(), scan);
  }
}

TEST(Family, TruncatedMeetExamples) {
  EXPECT_EQ(truncated_family_meet(evens(), 0), family_member(evens(), 0));
  const SmallEq k2 = truncated_family_meet(evens(), 2);
  EXPECT_EQ(k2.tail_head_members(), (std::vector<Element>{0, 2, 4, 6}));
  EXPECT_EQ(k2.threshold(), 8u);
  EXPECT_EQ(k2, family_closed_form(evens(), 2));
  const std::vector<Element> members = {0, 2, 4, 6};
  EXPECT_EQ(smalleq_restrict(k2, 8), Partition::singular(8, members));
}

TEST(Family, MeetsDecreaseInK) {
  const SingularFamilySpec spec{named_predicate("prime"), default_cuts(7)};
  for (std::size_t k = 1; k <= 6; ++k) {
    EXPECT_TRUE(leq(smalleq_restrict(truncated_family_meet(spec, k), 200),
                    smalleq_restrict(truncated_family_meet(spec, k - 1), 200)));
  }
}

TEST(Atoms, Examples) {
  std::vector<Element> all = {0, 1, 2, 3, 4};
  EXPECT_EQ(atoms_to_singular(all, 5), Partition::top(5));
  const std::vector<Element> pair = {1, 3};
  const auto atoms = star_atoms(pair, 4);
  ASSERT_EQ(atoms.size(), 1u);
  EXPECT_EQ(atoms[0], Atom::make(1, 3, 4));
  EXPECT_EQ(atoms_to_singular(pair, 4), test::P({{0}, {1, 3}, {2}}));
  const std::vector<Element> one = {2};
  EXPECT_THROW(atoms_to_singular(one, 4), Error);
  const std::vector<Element> outside = {1, 9};
  EXPECT_THROW(atoms_to_singular(outside, 4), Error);
}

TEST(Atoms, RandomAgainstDirectConstruction) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 2 + rng() % 9;
    std::vector<Element> set;
    while (set.size() < 2) {
      set.clear();
      for (Element x = 0; x < n; ++x) {
        if (rng() % 2) set.push_back(x);
      }
    }
    const Partition p = atoms_to_singular(set, n);
    EXPECT_EQ(p, oracle::singular(n, set));
    EXPECT_EQ(non_singleton_class(p), set);
    for (const auto& a : star_atoms(set, n)) EXPECT_TRUE(leq(a.to_partition(), p));
  }
}

}  // namespace
}  // namespace equlat
