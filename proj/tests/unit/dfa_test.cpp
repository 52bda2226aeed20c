#include <gtest/gtest.h>

#include "equlat/automatic.hpp"
#include "equlat/checks/zoo.hpp"
#include "equlat/dfa.hpp"
#include "equlat/dfa_io.hpp"
#include "equlat/error.hpp"
#include "support.hpp"

namespace equlat {
namespace {

bool accepts(const Dfa& d, const std::string& w) { return d.accepts(word_from_string(w)); }

TEST(Dfa, RejectsBadTables) {
  EXPECT_THROW(Dfa(1, 0, {0, 0}, {false}), Error);
  EXPECT_THROW(Dfa(1, 1, {0, 0, 0}, {false}), Error);
  EXPECT_THROW(Dfa(1, 0, {0, 0, 1}, {false}), Error);
}

TEST(Dfa, FiniteLanguageHelper) {
  const Dfa d = test::finite_language({"0B0", "1B1"});
  EXPECT_TRUE(accepts(d, "0B0"));
  EXPECT_TRUE(accepts(d, "1□1"));
  EXPECT_FALSE(accepts(d, "0B1"));
  EXPECT_FALSE(accepts(d, ""));
}

TEST(Dfa, ProductAndEmptiness) {
  const Dfa a = test::finite_language({"0B0", "1B1"});
  const Dfa b = test::finite_language({"1B1", "10B10"});
  EXPECT_FALSE(is_empty(product(a, b, Combine::kAnd)));
  EXPECT_TRUE(accepts(product(a, b, Combine::kAnd), "1B1"));
  EXPECT_FALSE(accepts(product(a, b, Combine::kAnd), "0B0"));
  EXPECT_TRUE(accepts(product(a, b, Combine::kXor), "0B0"));
  EXPECT_TRUE(is_empty(product(a, a, Combine::kAndNot)));
  EXPECT_TRUE(is_empty(test::finite_language({})));
}

TEST(Dfa, ShortlexLeastWord) {
  const Dfa d = test::finite_language({"11B1", "1B0", "10B1"});
  const auto w = shortlex_least_word(d, d.start());
  ASSERT_TRUE(w);
  EXPECT_EQ(word_to_string(*w), "1B0");
  EXPECT_FALSE(shortlex_least_word(test::finite_language({}), 1));
}

TEST(Dfa, MinimizeIsIdempotentAndEquivalent) {
  for (const auto& name : checks::builtin_relation_names()) {
    const Dfa d = checks::builtin_relation_dfa(name);
    const Dfa padded = product(d, d, Combine::kAnd);
    const Dfa m = minimize(padded);
    EXPECT_EQ(minimize(m).state_count(), m.state_count()) << name;
    EXPECT_TRUE(equivalent(padded, m)) << name;
    EXPECT_TRUE(equivalent(d, m)) << name;
  }
}

// Same language, twice the states: every state gets a twin and transitions
// alternate between the two copies.
Dfa doubled(const Dfa& d) {
  const std::size_t n = d.state_count();
  std::vector<StateId> table(2 * n * kAlphabetSize);
  std::vector<bool> accepting(2 * n);
  for (std::size_t copy = 0; copy < 2; ++copy) {
    for (StateId q = 0; q < n; ++q) {
      accepting[copy * n + q] = d.accepting(q);
      for (Symbol s : kAlphabet) {
        table[(copy * n + q) * kAlphabetSize + static_cast<std::size_t>(s)] =
            static_cast<StateId>((1 - copy) * n + d.next(q, s));
      }
    }
  }
  return Dfa(2 * n, d.start(), table, accepting);
}

TEST(Dfa, EquivalentHandBuiltAutomataWithDifferentSizes) {
  const Dfa kernel = kernel_dfa(classifiers::length_capped(3));
  const Dfa twin = doubled(kernel);
  EXPECT_GT(twin.state_count(), kernel.state_count());
  EXPECT_TRUE(equivalent(kernel, twin));
  EXPECT_EQ(minimize(twin).state_count(), kernel.state_count());
  EXPECT_FALSE(equivalent(kernel, kernel_dfa(classifiers::length_capped(2))));
}

TEST(DfaIo, RoundTrip) {
  for (const auto& name : checks::builtin_relation_names()) {
    const Dfa d = minimize(checks::builtin_relation_dfa(name));
    const std::string text = format_dfa(d);
    EXPECT_EQ(parse_dfa(text), d) << name;
    EXPECT_EQ(format_dfa(parse_dfa(text)), text) << name;
  }
}

TEST(DfaIo, Errors) {
  EXPECT_THROW(parse_dfa("states: 1\nstart: 0\naccept:\ntrans: 0 0 0\ntrans: 0 1 0\n"), Error);  // missing B
  EXPECT_THROW(parse_dfa("states: 1\nstart: 0\ntrans: 0 0 0\ntrans: 0 1 0\ntrans: 0 B 0\ntrans: 0 B 0\n"), Error);
  EXPECT_THROW(parse_dfa("states: 1\nstart: 0\ntrans: 0 2 0\n"), Error);
  EXPECT_NO_THROW(parse_dfa("states: 1\nstart: 0\naccept:\ntrans: 0 0 0\ntrans: 0 1 0\ntrans: 0 B 0\n"));
}

}  // namespace
}  // namespace equlat
