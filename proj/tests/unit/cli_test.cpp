#include <gtest/gtest.h>

#include <filesystem>

#include "cli.hpp"
#include "equlat/automatic.hpp"
#include "equlat/checks/zoo.hpp"
#include "equlat/dfa_io.hpp"
#include "equlat/partition_io.hpp"
#include "equlat/text_io.hpp"
#include "equlat/tm.hpp"

namespace equlat::cli {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(EQULAT_TEST_TMP) / ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  std::string file(const std::string& name, const std::string& contents) {
    const std::string path = (dir_ / name).string();
    write_text_file(path, contents);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static CommandResult call(std::vector<std::string> args) { return run(args); }

  fs::path dir_;
};

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

TEST_F(Cli, PartitionMeetOfTopAndBottom) {
  const auto top = file("top", format_partition(Partition::top(4)));
  const auto bottom = file("bottom", format_partition(Partition::bottom(4)));
  const auto r = call({"partition", "meet", top, bottom});
  EXPECT_EQ(r.exit_status, kExitOk) << r.report;
  ASSERT_TRUE(r.output);
  EXPECT_EQ(*r.output, format_partition(Partition::bottom(4)));
  EXPECT_EQ(call({"partition", "leq", bottom, top}).report, "true");
  EXPECT_EQ(call({"partition", "leq", top, bottom}).report, "false");
  const auto j = call({"partition", "join", top, bottom});
  EXPECT_EQ(parse_partition(*j.output), Partition::top(4));
}

TEST_F(Cli, ComplementFilePassesVerifyComplement) {
  const auto e = file("e", "class: 0 1\nclass: 2 3\nclass: 4\n");
  const auto r = call({"partition", "complement", e, "--out", path("c")});
  EXPECT_EQ(r.exit_status, kExitOk) << r.report;
  EXPECT_FALSE(r.output);
  EXPECT_TRUE(contains(r.report, "wrote"));
  const auto v = call({"verify", "complement", e, path("c")});
  EXPECT_EQ(v.exit_status, kExitOk) << v.report;
  EXPECT_EQ(call({"verify", "complement", e, e}).exit_status, kExitCheckFailed);
}

TEST_F(Cli, PartitionErrors) {
  const auto bad = file("bad", "class: 0 1\nclass 2 3\n");
  const auto r = call({"partition", "complement", bad});
  EXPECT_EQ(r.exit_status, kExitBadInput);
  EXPECT_TRUE(contains(r.report, "line 2")) << r.report;
  const auto three = file("three", format_partition(Partition::top(3)));
  const auto four = file("four", format_partition(Partition::top(4)));
  const auto mismatch = call({"partition", "meet", three, four});
  EXPECT_EQ(mismatch.exit_status, kExitBadInput);
  EXPECT_TRUE(contains(mismatch.report, "universe")) << mismatch.report;
  EXPECT_EQ(call({"partition", "meet", path("missing"), four}).exit_status, kExitBadInput);
}

TEST_F(Cli, PartitionAtomsRecompose) {
  const auto e = file("e", "class: 0 2 4\nclass: 1 3\n");
  const auto r = call({"partition", "atoms", e});
  EXPECT_EQ(r.exit_status, kExitOk);
  EXPECT_TRUE(contains(r.report, "atom: 0 2"));
  EXPECT_EQ(parse_partition(*r.output), parse_partition(read_text_file(e)));
}

TEST_F(Cli, AutomaticCheck) {
  const auto good = call({"automatic", "check", "len-cap-3"});
  EXPECT_EQ(good.exit_status, kExitOk) << good.report;
  EXPECT_EQ(good.report, "format: pass\nreflexive: pass\nsymmetric: pass\ntransitive: pass");
  for (const auto& [name, d] : checks::non_equivalence_dfas()) {
    const auto bad = call({"automatic", "check", file(name + ".dfa", format_dfa(d))});
    EXPECT_EQ(bad.exit_status, kExitCheckFailed) << name;
    EXPECT_TRUE(contains(bad.report, "FAIL")) << bad.report;
  }
  const auto b = call({"automatic", "check", file("blank.dfa", "states: 2\nstart: 0\naccept: 1\n"
                                                                  "trans: 0 0 1\ntrans: 0 1 1\ntrans: 0 B 1\n"
                                                                  "trans: 1 0 1\ntrans: 1 1 1\ntrans: 1 B 1\n")});
  EXPECT_EQ(b.report, "format: FAIL\nreflexive: skipped\nsymmetric: skipped\ntransitive: skipped");
}

TEST_F(Cli, AutomaticDecideRepsAndRoundTrips) {
  for (const auto& name : checks::builtin_relation_names()) EXPECT_EQ(call({"automatic", "decide", name, "5", "5"}).report, "true");
  EXPECT_TRUE(contains(call({"automatic", "reps", "singleton-3"}).report, "2 classes; representatives: 0, 3"));
  const auto meet = call({"automatic", "meet", "parity", "mod3"});
  ASSERT_TRUE(meet.output);
  const Dfa d = parse_dfa(*meet.output);
  EXPECT_EQ(format_dfa(d), *meet.output);
  EXPECT_EQ(AutomaticEq::from_dfa(d).class_count(), 6u);
  const auto f = file("mod4.dfa", *call({"automatic", "builtin", "mod4"}).output);
  const auto grouping = file("g", "class: 0 2\nclass: 1 3\n");
  const auto coarse = call({"automatic", "coarsen", f, grouping});
  ASSERT_TRUE(coarse.output) << coarse.report;
  EXPECT_TRUE(equivalent(parse_dfa(*coarse.output), checks::builtin_relation_dfa("parity")));
  const auto joined = call({"automatic", "join", "singleton-3", "singleton-5"});
  EXPECT_TRUE(contains(joined.report, "1 classes"));
  const auto restricted = call({"automatic", "restrict", "mod3", "--n", "6"});
  EXPECT_EQ(parse_partition(*restricted.output), Partition::from_classes({{0, 3}, {1, 4}, {2, 5}}));
  const auto minimized = call({"automatic", "minimize", f});
  EXPECT_EQ(format_dfa(parse_dfa(*minimized.output)), *minimized.output);
  EXPECT_EQ(call({"automatic", "decide", "nonesuch", "1", "2"}).exit_status, kExitBadInput);
}

TEST_F(Cli, Decider) {
  const auto r = call({"decider", "restrict", "meet(parity, singular(even))", "--n", "6"});
  EXPECT_EQ(r.exit_status, kExitOk) << r.report;
  EXPECT_EQ(parse_partition(*r.output), Partition::from_classes({{0, 2, 4}, {1}, {3}, {5}}));
  EXPECT_EQ(call({"decider", "decide", "complement(parity)", "0", "1"}).report, "true");
  EXPECT_EQ(call({"decider", "decide", "complement(parity)", "0", "2"}).report, "false");
  const auto j = call({"decider", "join", "singular(even)", "parity", "1", "3", "--universe", "8"});
  EXPECT_TRUE(contains(j.report, "related within bounds")) << j.report;
  const auto miss = call({"decider", "join", "bottom", "bottom", "1", "3", "--universe", "8"});
  EXPECT_TRUE(contains(miss.report, "no chain within bounds")) << miss.report;
  const auto check = call({"decider", "check", "nonhalt(3)", "--bound", "8"});
  EXPECT_EQ(check.exit_status, kExitOk) << check.report;
  EXPECT_EQ(call({"decider", "decide", "meet(parity", "1", "2"}).exit_status, kExitBadInput);
  EXPECT_EQ(call({"decider", "decide", "frob", "1", "2"}).exit_status, kExitBadInput);
  EXPECT_TRUE(contains(call({"decider", "grammar"}).report, "complement(expr)"));
  const auto p = file("p", "class: 0 3\nclass: 1 2\n");
  EXPECT_EQ(call({"decider", "decide", "partition(" + p + ")", "0", "3"}).report, "true");
  EXPECT_EQ(call({"decider", "decide", "approx-even(incrementer)", "7", "7"}).report, "true");
}

TEST_F(Cli, TuringMachines) {
  const auto run = call({"tm", "run", "incrementer", "11"});
  EXPECT_TRUE(contains(run.report, "halted after 3 steps")) << run.report;
  EXPECT_TRUE(contains(call({"tm", "probe", "incrementer", "11", "--bound", "10"}).report, "HaltsInSteps 3"));
  EXPECT_TRUE(contains(call({"tm", "probe", "loop_stay", "--bound", "100"}).report, "NoHaltWithinBound"));
  const auto formatted = call({"tm", "format", "bb2"});
  EXPECT_EQ(format_tm(parse_tm(*formatted.output)), *formatted.output);
  const auto code = call({"tm", "encode", "bb2"});
  std::string digits = *code.output;
  digits.pop_back();
  EXPECT_EQ(call({"tm", "decode", digits}).output, formatted.output);
  EXPECT_EQ(call({"tm", "decode", "12345"}).exit_status, kExitBadInput);
  EXPECT_TRUE(contains(call({"tm", "zoo"}).report, "tri_sweep: halts in"));
  EXPECT_TRUE(contains(call({"tm", "run", "walk_right_12", "--trace", "--bound", "3"}).report, "3: "));
}

TEST_F(Cli, Family) {
  const auto r = call({"family", "meet", "--pred", "even", "--cuts", "2,4,8", "--k", "2"});
  ASSERT_TRUE(r.output) << r.report;
  EXPECT_TRUE(contains(r.report, "{0 2 4 6} ∪ ↑8")) << r.report;
  EXPECT_EQ(format_small_eq(parse_small_eq(*r.output)), *r.output);
  const auto member = call({"family", "member", "--pred", "bitmask:0110", "--cuts", "2,4", "--i", "1"});
  EXPECT_TRUE(contains(member.report, "{1 2} ∪ ↑4")) << member.report;
  const auto atoms = call({"family", "atoms", "--set", "1,3,5", "--n", "8"});
  EXPECT_EQ(parse_partition(*atoms.output), Partition::from_classes({{0}, {1, 3, 5}, {2}, {4}, {6}, {7}}));
  EXPECT_EQ(call({"family", "meet", "--cuts", "4,2", "--k", "1"}).exit_status, kExitBadInput);
  EXPECT_EQ(call({"family", "meet", "--cuts", "2,4", "--k", "5"}).exit_status, kExitBadInput);
}

TEST_F(Cli, Demos) {
  const auto growth = call({"demo", "automatic-meet-growth", "--k", "8"});
  EXPECT_EQ(growth.exit_status, kExitOk) << growth.report;
  EXPECT_TRUE(contains(growth.report, "k=1: 2 classes"));
  EXPECT_TRUE(contains(growth.report, "k=8: 9 classes"));
  const auto probe = call({"demo", "join-undecidable", "--machine", "incrementer", "--input", "11", "--bound", "50"});
  EXPECT_EQ(probe.exit_status, kExitOk) << probe.report;
  EXPECT_TRUE(contains(probe.report, "probe: HaltsInSteps 3"));
  EXPECT_TRUE(contains(probe.report, "simulation: halts after 3 steps"));
  const auto atoms = call({"demo", "atoms", "--set", "1,3,5", "--n", "8"});
  EXPECT_EQ(atoms.exit_status, kExitOk) << atoms.report;
  EXPECT_TRUE(contains(atoms.report, "big class {1 3 5}"));
  EXPECT_EQ(call({"demo", "family-meet", "--pred", "prime", "--k", "4"}).exit_status, kExitOk);
  const auto nonhalt = call({"demo", "nonhalt-meet", "--k", "10"});
  EXPECT_EQ(nonhalt.exit_status, kExitOk) << nonhalt.report;
  EXPECT_TRUE(contains(nonhalt.report, "loop_stay"));
  EXPECT_FALSE(contains(nonhalt.report, "halt_now,"));
}

TEST_F(Cli, Verify) {
  const auto ok = call({"verify", "lattice"});
  EXPECT_EQ(ok.exit_status, kExitOk) << ok.report;
  const auto broken = call({"verify", "lattice", "--inject-fault", "join"});
  EXPECT_EQ(broken.exit_status, kExitCheckFailed);
  EXPECT_TRUE(contains(broken.report, "FAIL  lattice-axioms  (commutativity of join")) << broken.report;
  EXPECT_EQ(call({"verify", "nope"}).exit_status, kExitBadInput);
  EXPECT_EQ(call({"verify", "lattice", "--inject-fault", "nope"}).exit_status, kExitBadInput);
}

TEST_F(Cli, UsageAndOut) {
  EXPECT_EQ(call({"--help"}).exit_status, kExitOk);
  EXPECT_EQ(call({}).exit_status, kExitBadInput);
  EXPECT_EQ(call({"partition", "frobnicate"}).exit_status, kExitBadInput);
  EXPECT_EQ(call({"partition", "meet", "only-one"}).exit_status, kExitBadInput);
  const auto r = call({"automatic", "reps", "mod3", "--out", path("reps.txt")});
  EXPECT_EQ(r.exit_status, kExitOk);
  EXPECT_TRUE(contains(read_text_file(path("reps.txt")), "representatives: 0, 1, 2"));
  const auto before = call({"--out", path("top.dfa"), "automatic", "builtin", "top"});
  EXPECT_EQ(before.exit_status, kExitOk) << before.report;
  EXPECT_EQ(parse_dfa(read_text_file(path("top.dfa"))).state_count(),
            AutomaticEq::from_dfa(checks::builtin_relation_dfa("top")).dfa().state_count());
}

TEST_F(Cli, StateDoesNotLeakBetweenCalls) {
  EXPECT_TRUE(contains(call({"tm", "run", "incrementer", "11"}).report, "halted after 3 steps"));
  EXPECT_TRUE(contains(call({"tm", "run", "incrementer"}).report, "halted after 2 steps"));
}

}  // namespace
}  // namespace equlat::cli
