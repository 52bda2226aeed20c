#include <gtest/gtest.h>

#include <algorithm>

#include "equlat/automatic.hpp"
#include "equlat/checks/oracles.hpp"
#include "equlat/checks/zoo.hpp"
#include "equlat/error.hpp"
#include "support.hpp"

namespace equlat {
namespace {

const Dfa& named_negative(const std::string& name) {
  static const auto all = checks::non_equivalence_dfas();
  for (const auto& d : all) {
    if (d.name == name) return d.dfa;
  }
  throw std::runtime_error("no such negative: " + name);
}

AutomaticEq builtin(const std::string& name) { return AutomaticEq::from_dfa(checks::builtin_relation_dfa(name)); }

TEST(Binrep, Canonical) {
  EXPECT_EQ(binrep(0), "0");
  EXPECT_EQ(binrep(1), "1");
  EXPECT_EQ(binrep(6), "110");
  EXPECT_EQ(word_to_string(pair_word(2, 0)), "10B0");
  for (std::uint64_t x : {0ull, 1ull, 5ull, 1023ull, ~0ull}) EXPECT_EQ(binrep_value(binrep_word(x)), x);
}

TEST(Format, Examples) {
  EXPECT_TRUE(check_format(test::finite_language({"0B0"})));
  EXPECT_FALSE(check_format(test::finite_language({"B"})));
  EXPECT_FALSE(check_format(test::finite_language({"01B1"})));
  EXPECT_FALSE(check_format(test::finite_language({"1B1B1"})));
  EXPECT_TRUE(check_format(pair_format_dfa()));
}

TEST(Reflexive, Examples) {
  EXPECT_TRUE(check_reflexive(pair_format_dfa()));
  EXPECT_FALSE(check_reflexive(named_negative("length-parity-differs")));
  EXPECT_FALSE(check_reflexive(test::finite_language({"0B0", "1B1"})));
  EXPECT_TRUE(check_reflexive_sampled(test::finite_language({"0B0", "1B1"}), 2));
}

TEST(Reflexive, AgreesWithBruteForceBelow512) {
  std::vector<checks::NamedDfa> dfas = checks::non_equivalence_dfas();
  for (const auto& name : checks::builtin_relation_names()) dfas.push_back({name, checks::builtin_relation_dfa(name)});
  for (const auto& [name, d] : dfas) {
    bool brute = true;
    for (std::uint64_t m = 0; m < 512 && brute; ++m) brute = d.accepts(pair_word(m, m));
    EXPECT_EQ(check_reflexive(d), brute) << name;
  }
}

TEST(Symmetric, Examples) {
  EXPECT_TRUE(check_symmetric(checks::builtin_relation_dfa("len-cap-3")));
  EXPECT_FALSE(check_symmetric(named_negative("length-below")));
  EXPECT_TRUE(check_symmetric(named_negative("low-bits-overlap")));
  EXPECT_THROW(check_symmetric(test::finite_language({"B"})), Error);
}

TEST(Symmetric, AgreesWithBruteForceBelow128) {
  std::vector<checks::NamedDfa> dfas = checks::non_equivalence_dfas();
  for (const auto& name : checks::builtin_relation_names()) dfas.push_back({name, checks::builtin_relation_dfa(name)});
  for (const auto& [name, d] : dfas) {
    bool brute = true;
    for (std::uint64_t m = 0; m < 128 && brute; ++m) {
      for (std::uint64_t n = 0; n < 128 && brute; ++n) brute = d.accepts(pair_word(m, n)) == d.accepts(pair_word(n, m));
    }
    EXPECT_EQ(check_symmetric(d), brute) << name;
  }
}

TEST(Transitive, Examples) {
  EXPECT_TRUE(check_transitive(checks::builtin_relation_dfa("len-cap-4")));
  EXPECT_TRUE(check_transitive(named_negative("length-below")));
  const Dfa overlap = named_negative("low-bits-overlap");
  EXPECT_FALSE(check_transitive(overlap));
  bool witness = false;
  for (std::uint64_t m = 0; m < 64 && !witness; ++m) {
    for (std::uint64_t n = 0; n < 64 && !witness; ++n) {
      for (std::uint64_t p = 0; p < 64 && !witness; ++p) {
        witness = overlap.accepts(pair_word(m, n)) && overlap.accepts(pair_word(n, p)) &&
                  !overlap.accepts(pair_word(m, p));
      }
    }
  }
  EXPECT_TRUE(witness);
}

TEST(Transitive, AgreesWithBruteForceBelow64) {
  std::vector<checks::NamedDfa> dfas = checks::non_equivalence_dfas();
  for (const auto& name : checks::builtin_relation_names()) dfas.push_back({name, checks::builtin_relation_dfa(name)});
  for (const auto& [name, d] : dfas) {
    EXPECT_EQ(check_transitive(d), oracle::transitive(oracle::dfa_matrix(d, 64))) << name;
  }
}

TEST(AutomaticEq, RejectsNonEquivalences) {
  for (const auto& [name, d] : checks::non_equivalence_dfas()) {
    try {
      AutomaticEq::from_dfa(d);
      FAIL() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kNotEquivalence) << name;
    }
  }
  EXPECT_FALSE(check_axioms(test::finite_language({"B"})).format);
}

TEST(AutomaticEq, DecideExamples) {
  for (const auto& name : checks::builtin_relation_names()) {
    const AutomaticEq a = builtin(name);
    EXPECT_TRUE(a.decide(5, 5)) << name;
    for (std::uint64_t m = 0; m < 32; ++m) {
      for (std::uint64_t n = 0; n < 32; ++n) EXPECT_EQ(a.decide(m, n), a.decide(n, m)) << name;
    }
  }
  const AutomaticEq len = builtin("len-cap-4");
  EXPECT_TRUE(len.decide(4, 7));
  EXPECT_FALSE(len.decide(3, 4));
  EXPECT_TRUE(len.decide(8, 1000));
}

TEST(AutomaticEq, Representatives) {
  const AutomaticEq top = top_relation();
  EXPECT_EQ(std::vector<std::uint64_t>(top.representatives().begin(), top.representatives().end()),
            std::vector<std::uint64_t>{0});
  for (std::uint32_t k = 1; k <= 5; ++k) {
    const AutomaticEq a = AutomaticEq::from_dfa(kernel_dfa(classifiers::length_capped(k)));
    std::vector<std::uint64_t> expected = {0};
    for (std::uint32_t i = 1; i < k; ++i) expected.push_back(std::uint64_t{1} << i);
    std::vector<std::uint64_t> brute;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (k + 2)); ++m) {
      if (std::none_of(brute.begin(), brute.end(), [&](std::uint64_t r) { return a.decide(m, r); })) brute.push_back(m);
    }
    const std::vector<std::uint64_t> reps(a.representatives().begin(), a.representatives().end());
    EXPECT_EQ(reps, expected) << k;
    EXPECT_EQ(brute, expected) << k;
    EXPECT_LE(a.class_count(), a.dfa().state_count());
  }
}

TEST(AutomaticEq, ClassIndexMatchesRepresentatives) {
  const AutomaticEq a = builtin("mod3");
  for (std::size_t i = 0; i < a.class_count(); ++i) EXPECT_EQ(a.class_index(a.representatives()[i]), i);
  EXPECT_EQ(a.class_index(7), a.class_index(1));
}

TEST(AutomaticMeet, Examples) {
  const AutomaticEq top = top_relation();
  for (const auto& name : checks::builtin_relation_names()) {
    const AutomaticEq a = builtin(name);
    EXPECT_TRUE(equivalent(meet(a, top).dfa(), a.dfa())) << name;
    for (const auto& other : checks::builtin_relation_names()) {
      const AutomaticEq b = builtin(other);
      const AutomaticEq m = meet(a, b);
      EXPECT_LE(m.dfa().state_count(), a.dfa().state_count() * b.dfa().state_count());
      EXPECT_EQ(m.restrict(64), meet(a.restrict(64), b.restrict(64))) << name << " " << other;
    }
  }
}

TEST(AutomaticJoin, WithItselfAndAgainstBruteForce) {
  for (const auto& name : checks::builtin_relation_names()) {
    const AutomaticEq a = builtin(name);
    EXPECT_TRUE(equivalent(join(a, a).dfa(), a.dfa())) << name;
  }
  const AutomaticEq parity = builtin("parity");
  const AutomaticEq small = builtin("len-cap-2");  // {0, 1} vs everything else
  const AutomaticEq j = join(parity, small);
  EXPECT_EQ(j.class_count(), 1u);
  EXPECT_EQ(j.restrict(64), oracle::chain_closure_join(parity.restrict(64), small.restrict(64)));
  const AutomaticEq s3 = builtin("singleton-3");
  const AutomaticEq s5 = builtin("singleton-5");
  EXPECT_EQ(join(s3, s5).class_count(), 1u);
  EXPECT_EQ(join(s3, builtin("mod4")).restrict(64),
            oracle::chain_closure_join(s3.restrict(64), builtin("mod4").restrict(64)));
}

TEST(AutomaticJoin, ChainsImplyJoin) {
  const AutomaticEq a = builtin("mod3");
  const AutomaticEq b = builtin("singleton-5");
  const AutomaticEq j = join(a, b);
  // 2 ~mod3 5 and 5 is alone in b, so nothing new; 0 ~b 1 ~b 2.
  EXPECT_TRUE(j.decide(0, 1));
  EXPECT_TRUE(j.decide(0, 5));
  const JoinAnalysis an = analyze_join(a, b);
  EXPECT_EQ(an.component_count, 1u);
  for (const auto& e : an.edges) EXPECT_LT(e.witness, an.restriction_cutoff);
}

TEST(Coarsen, Examples) {
  for (const auto& name : checks::builtin_relation_names()) {
    const AutomaticEq a = builtin(name);
    const std::size_t k = a.class_count();
    EXPECT_TRUE(equivalent(coarsen(a, Partition::bottom(k)).dfa(), a.dfa())) << name;
    EXPECT_EQ(coarsen(a, Partition::top(k)).class_count(), 1u) << name;
    EXPECT_EQ(coarsen(a, Partition::top(k)).restrict(128), Partition::top(128)) << name;
  }
  const AutomaticEq mod4 = builtin("mod4");
  const AutomaticEq merged = coarsen(mod4, test::P({{0, 2}, {1}, {3}}));
  EXPECT_EQ(merged.class_count(), 3u);
  EXPECT_TRUE(leq(mod4.restrict(128), merged.restrict(128)));
  EXPECT_THROW(coarsen(mod4, Partition::top(3)), Error);
}

TEST(SingletonFamily, Examples) {
  const AutomaticEq s3 = singleton_family(3);
  EXPECT_FALSE(s3.decide(3, 5));
  EXPECT_TRUE(s3.decide(4, 5));
  EXPECT_EQ(s3.class_count(), 2u);
  EXPECT_EQ(std::vector<std::uint64_t>(s3.representatives().begin(), s3.representatives().end()),
            (std::vector<std::uint64_t>{0, 3}));
  EXPECT_EQ(family_meet_demo(1), std::vector<std::size_t>{2});
  EXPECT_EQ(family_meet_demo(4), (std::vector<std::size_t>{2, 3, 4, 5}));
}

}  // namespace
}  // namespace equlat
