#include <gtest/gtest.h>

#include "equlat/automatic.hpp"
#include "equlat/checks/oracles.hpp"
#include "equlat/checks/zoo.hpp"
#include "support.hpp"

// The oracles judge everything else, so they get their own small checks
// against hand-worked answers.

namespace equlat {
namespace {

using test::P;

TEST(Oracle, MatrixRoundTrip) {
  const Partition e = P({{0, 3}, {1}, {2, 4}});
  const auto m = oracle::matrix_of(e);
  EXPECT_TRUE(m[0][3]);
  EXPECT_FALSE(m[0][1]);
  EXPECT_EQ(oracle::partition_of(m), e);
  EXPECT_TRUE(oracle::reflexive(m));
  EXPECT_TRUE(oracle::symmetric(m));
  EXPECT_TRUE(oracle::transitive(m));
}

TEST(Oracle, MeetAndChainJoin) {
  EXPECT_EQ(oracle::meet(P({{0, 1}, {2, 3}}), P({{0, 2}, {1, 3}})), Partition::bottom(4));
  EXPECT_EQ(oracle::chain_closure_join(P({{0, 1}, {2}, {3, 4}}), P({{0}, {1, 2}, {3}, {4}})),
            P({{0, 1, 2}, {3, 4}}));
}

TEST(Oracle, Singular) {
  const std::vector<std::size_t> members = {4, 1};
  EXPECT_EQ(oracle::singular(5, members), P({{0}, {1, 4}, {2}, {3}}));
  const std::vector<std::size_t> one = {2};
  EXPECT_EQ(oracle::singular(3, one), Partition::bottom(3));
}

TEST(Oracle, AxiomPredicatesOnMatrices) {
  oracle::Matrix near(4, std::vector<bool>(4, false));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) near[i][j] = i - j <= 1 && j - i <= 1;
  }
  EXPECT_TRUE(oracle::reflexive(near));
  EXPECT_TRUE(oracle::symmetric(near));
  EXPECT_FALSE(oracle::transitive(near));
  near[0][1] = false;
  EXPECT_FALSE(oracle::symmetric(near));
}

TEST(Oracle, DfaMatrix) {
  const auto m = oracle::dfa_matrix(checks::builtin_relation_dfa("parity"), 6);
  EXPECT_EQ(oracle::partition_of(m), P({{0, 2, 4}, {1, 3, 5}}));
}

TEST(Oracle, Components) {
  const std::vector<Natural> points = {1, 2, 3, 10, 11, 20};
  const auto ids = oracle::components(points, [](const Natural& a, const Natural& b) { return b == a + 1; });
  EXPECT_EQ(ids[0], ids[2]);
  EXPECT_EQ(ids[3], ids[4]);
  EXPECT_NE(ids[0], ids[3]);
  EXPECT_NE(ids[5], ids[3]);
}

}  // namespace
}  // namespace equlat
