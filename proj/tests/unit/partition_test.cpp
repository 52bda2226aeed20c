#include <gtest/gtest.h>

#include <random>

#include "equlat/checks/oracles.hpp"
#include "equlat/error.hpp"
#include "equlat/partition.hpp"
#include "equlat/partition_enum.hpp"
#include "equlat/partition_io.hpp"
#include "support.hpp"

namespace equlat {
namespace {

using test::P;

std::vector<Element> labels(const Partition& p) { return {p.labels().begin(), p.labels().end()}; }

TEST(Partition, BottomAndTop) {
  EXPECT_EQ(Partition::bottom(3).classes(), (std::vector<std::vector<Element>>{{0}, {1}, {2}}));
  EXPECT_EQ(Partition::bottom(1).classes(), (std::vector<std::vector<Element>>{{0}}));
  EXPECT_EQ(Partition::bottom(8).class_count(), 8u);
  EXPECT_EQ(Partition::top(3).classes(), (std::vector<std::vector<Element>>{{0, 1, 2}}));
  EXPECT_EQ(Partition::top(8).class_count(), 1u);
  EXPECT_EQ(Partition::top(1), Partition::bottom(1));
}

TEST(Partition, EmptyUniverseIsRejected) {
  try {
    Partition::bottom(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidUniverse);
  }
  EXPECT_THROW(Partition::top(0), Error);
}

TEST(Partition, FromClasses) {
  EXPECT_EQ(labels(P({{0, 1}, {2}})), (std::vector<Element>{0, 0, 2}));
  EXPECT_EQ(P({{1, 0}, {2}}), P({{0, 1}, {2}}));
  for (const auto& bad : std::vector<std::vector<std::vector<Element>>>{{{0, 1}, {1, 2}}, {{0}, {2}}, {{0, 1}, {}}}) {
    try {
      Partition::from_classes(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidPartition);
    }
  }
}

TEST(Partition, LabelsAreLeastElements) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Partition p = random_partition(9, rng);
    for (Element x = 0; x < 9; ++x) {
      EXPECT_LE(p.class_of(x), x);
      EXPECT_EQ(p.class_of(p.class_of(x)), p.class_of(x));
    }
  }
}

TEST(Partition, Related) {
  EXPECT_TRUE(Partition::top(3).related(0, 2));
  EXPECT_FALSE(Partition::bottom(3).related(0, 2));
  const Partition e = P({{0, 3}, {1}, {2, 4}});
  for (Element x = 0; x < 5; ++x) EXPECT_TRUE(e.related(x, x));
}

TEST(Partition, LeqBoundsAndAntisymmetry) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = all_partitions(n);
    for (const auto& e : all) {
      EXPECT_TRUE(leq(Partition::bottom(n), e));
      EXPECT_TRUE(leq(e, Partition::top(n)));
      for (const auto& f : all) {
        if (leq(e, f) && leq(f, e)) {
          EXPECT_EQ(e, f);
        }
      }
    }
  }
}

TEST(Partition, MeetExamples) {
  const Partition e = P({{0, 1}, {2, 3}});
  EXPECT_EQ(meet(e, Partition::top(4)), e);
  EXPECT_EQ(meet(e, P({{0, 2}, {1, 3}})), Partition::bottom(4));
  EXPECT_EQ(meet(e, e), e);
}

TEST(Partition, JoinExamples) {
  const Partition e = P({{0, 1}, {2, 3}});
  EXPECT_EQ(join(e, Partition::bottom(4)), e);
  const Partition f = P({{1, 2}, {0}, {3}});
  EXPECT_EQ(join(e, f), Partition::top(4));
  EXPECT_EQ(oracle::chain_closure_join(e, f), Partition::top(4));
  EXPECT_EQ(join(e, e), e);
}

TEST(Partition, UniverseMismatch) {
  try {
    meet(Partition::top(2), Partition::top(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUniverseMismatch);
  }
  EXPECT_THROW(join(Partition::top(2), Partition::top(3)), Error);
  EXPECT_THROW(leq(Partition::top(2), Partition::top(3)), Error);
}

TEST(Partition, Singular) {
  EXPECT_TRUE(is_singular(Partition::top(3)));
  EXPECT_EQ(non_singleton_class(Partition::top(3)), (std::vector<Element>{0, 1, 2}));
  EXPECT_FALSE(is_singular(Partition::bottom(3)));
  const Partition e = P({{0, 2}, {1}, {3}});
  EXPECT_TRUE(is_singular(e));
  EXPECT_EQ(non_singleton_class(e), (std::vector<Element>{0, 2}));
  try {
    non_singleton_class(Partition::bottom(3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kNotSingular);
  }
  EXPECT_FALSE(is_singular(P({{0, 1}, {2, 3}})));
}

TEST(Partition, IsComplement) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(is_complement(Partition::bottom(n), Partition::top(n)));
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& e : all_partitions(n)) {
      if (e == Partition::bottom(n) || e == Partition::top(n)) continue;
      EXPECT_FALSE(is_complement(e, e));
    }
  }
  EXPECT_TRUE(is_complement(P({{0, 2}, {1}}), P({{0, 1}, {2}})));
}

TEST(Partition, SingularComplementValid) {
  EXPECT_TRUE(singular_complement_valid(Partition::top(2), Partition::bottom(2)));
  EXPECT_FALSE(singular_complement_valid(Partition::top(3), P({{0, 1}, {2}})));
  EXPECT_THROW(singular_complement_valid(Partition::bottom(3), Partition::top(3)), Error);
}

TEST(Partition, SingularComplementTestAgreesWithOracle) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = all_partitions(n);
    for (const auto& e : all) {
      if (!is_singular(e)) continue;
      for (const auto& f : all) EXPECT_EQ(singular_complement_valid(e, f), oracle::is_complement(e, f));
    }
  }
}

TEST(Partition, LeastElementComplementExamples) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(least_element_complement(Partition::top(n)), Partition::bottom(n));
    EXPECT_EQ(least_element_complement(Partition::bottom(n)), Partition::top(n));
  }
  const Partition e = P({{0, 1}, {2, 3}});
  const Partition c = least_element_complement(e);
  EXPECT_EQ(c, P({{0, 2}, {1}, {3}}));
  EXPECT_TRUE(oracle::is_complement(e, c));
}

TEST(Partition, LeastElementComplementIsAComplementUpToSeven) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_partition(n, [](const Partition& e) { ASSERT_TRUE(is_complement(e, least_element_complement(e))); });
  }
}

TEST(Partition, Atoms) {
  EXPECT_TRUE(atomistic_decomposition(Partition::bottom(4)).empty());
  const auto atoms = atomistic_decomposition(Partition::top(3));
  ASSERT_EQ(atoms.size(), 2u);
  EXPECT_EQ(atoms[0], Atom::make(0, 1, 3));
  EXPECT_EQ(atoms[1], Atom::make(0, 2, 3));
  EXPECT_EQ(Atom::make(2, 1, 3), Atom::make(1, 2, 3));
  EXPECT_THROW(Atom::make(1, 1, 3), Error);
  EXPECT_THROW(Atom::make(0, 3, 3), Error);
  EXPECT_EQ(Atom::make(1, 3, 4).to_partition(), P({{0}, {1, 3}, {2}}));
}

TEST(Partition, AtomisticRecompositionRandom) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const Partition e = random_partition(n, rng);
    EXPECT_EQ(join_atoms(atomistic_decomposition(e), n), e);
  }
}

TEST(Partition, Prefix) {
  const Partition e = P({{0, 3}, {1, 2}, {4}});
  EXPECT_EQ(e.prefix(3), P({{0}, {1, 2}}));
  EXPECT_THROW(e.prefix(6), Error);
}

TEST(PartitionEnum, BellNumbers) {
  const std::vector<std::size_t> bell = {1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 1; n <= bell.size(); ++n) EXPECT_EQ(all_partitions(n).size(), bell[n - 1]) << n;
}

TEST(PartitionIo, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Partition p = random_partition(1 + rng() % 12, rng);
    const std::string text = format_partition(p);
    EXPECT_EQ(parse_partition(text), p);
    EXPECT_EQ(format_partition(parse_partition(text)), text);
  }
}

TEST(PartitionIo, ParsesAnyOrderWithComments) {
  EXPECT_EQ(parse_partition("# two classes\nclass: 3 2\n\nclass: 1 0\n"), P({{0, 1}, {2, 3}}));
  EXPECT_EQ(format_partition(P({{0, 1}, {2, 3}})), "class: 0 1\nclass: 2 3\n");
}

TEST(PartitionIo, MalformedLineIsNamed) {
  try {
    parse_partition("class: 0 1\nclass 2 3\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_partition("class: 0 x\n"), Error);
  EXPECT_THROW(parse_partition("class: 0 1\nclass: 1 2\n"), Error);
  EXPECT_THROW(parse_partition(""), Error);
}

}  // namespace
}  // namespace equlat
