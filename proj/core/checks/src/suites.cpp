#include "equlat/checks/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>

#include "equlat/automatic.hpp"
#include "equlat/checks/oracles.hpp"
#include "equlat/clocked.hpp"
#include "equlat/constructions.hpp"
#include "equlat/decider.hpp"
#include "equlat/error.hpp"
#include "equlat/partition_enum.hpp"
#include "equlat/predicates.hpp"
#include "equlat/small_eq.hpp"

namespace equlat::checks {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

LatticeOps LatticeOps::standard() {
  return {[](const Partition& e, const Partition& f) { return equlat::meet(e, f); },
          [](const Partition& e, const Partition& f) { return equlat::join(e, f); },
          [](const Partition& e) { return equlat::least_element_complement(e); }};
}

std::vector<std::string> fault_names() { return {"join", "meet", "complement"}; }

LatticeOps with_fault(LatticeOps ops, const std::string& fault) {
  if (fault == "join") {
    ops.join = [](const Partition& e, const Partition&) { return e; };
  } else if (fault == "meet") {
    ops.meet = [](const Partition& e, const Partition&) { return e; };
  } else if (fault == "complement") {
    ops.complement = [](const Partition& e) { return e; };
  } else {
    throw Error(ErrorKind::kInvalidArgument, "unknown fault `" + fault + "`");
  }
  return ops;
}

namespace {

std::string brief(const Partition& p) {
  std::string out;
  for (const auto& cls : p.classes()) {
    out += '{';
    for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? " " : "") + std::to_string(cls[i]);
    out += '}';
  }
  return out;
}

// Counts expectations and keeps the first failure.
class Tally {
 public:
  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++count_;
    if (!ok && !failure_) failure_ = describe();
    return ok;
  }
  bool failed() const { return failure_.has_value(); }
  std::size_t count() const { return count_; }

  void fill(CheckOutcome& out, const std::string& covered) const {
    out.passed = !failure_;
    out.detail = failure_ ? *failure_ : covered + ", " + std::to_string(count_) + " comparisons";
  }

 private:
  std::size_t count_ = 0;
  std::optional<std::string> failure_;
};

template <class Body>
CheckOutcome run_check(const std::string& name, Body&& body) {
  CheckOutcome out;
  out.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("error: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

void axioms_on_pair(const LatticeOps& ops, const Partition& e, const Partition& f, Tally& t) {
  const Partition m = ops.meet(e, f);
  const Partition j = ops.join(e, f);
  auto at = [&](const char* axiom) {
    return [&e, &f, axiom] { return std::string(axiom) + " fails at E=" + brief(e) + " F=" + brief(f); };
  };
  t.expect(m == ops.meet(f, e), at("commutativity of meet"));
  t.expect(j == ops.join(f, e), at("commutativity of join"));
  t.expect(ops.meet(e, j) == e, at("absorption meet(E, join(E,F)) = E"));
  t.expect(ops.join(e, m) == e, at("absorption join(E, meet(E,F)) = E"));
  const bool below = leq(e, f);
  t.expect(below == (m == e), at("leq(E,F) <=> meet(E,F) = E"));
  t.expect(below == (j == f), at("leq(E,F) <=> join(E,F) = F"));
}

void axioms_on_single(const LatticeOps& ops, const Partition& e, Tally& t) {
  auto at = [&](const char* axiom) { return [&e, axiom] { return std::string(axiom) + " fails at E=" + brief(e); }; };
  t.expect(ops.meet(e, e) == e, at("idempotence of meet"));
  t.expect(ops.join(e, e) == e, at("idempotence of join"));
}

void axioms_on_triple(const LatticeOps& ops, const Partition& e, const Partition& f, const Partition& g, Tally& t) {
  auto at = [&](const char* axiom) {
    return [&, axiom] { return std::string(axiom) + " fails at E=" + brief(e) + " F=" + brief(f) + " G=" + brief(g); };
  };
  t.expect(ops.meet(ops.meet(e, f), g) == ops.meet(e, ops.meet(f, g)), at("associativity of meet"));
  t.expect(ops.join(ops.join(e, f), g) == ops.join(e, ops.join(f, g)), at("associativity of join"));
}

bool ops_is_complement(const LatticeOps& ops, const Partition& e, const Partition& f) {
  const std::size_t n = e.universe_size();
  return ops.meet(e, f) == Partition::bottom(n) && ops.join(e, f) == Partition::top(n);
}

}  // namespace

CheckOutcome check_lattice_axioms(const LatticeOps& ops, std::size_t exhaustive_n, std::size_t random_n,
                                  std::size_t random_cases, std::uint64_t seed) {
  return run_check("lattice-axioms", [&](CheckOutcome& out) {
    Tally t;
    for (std::size_t n = 1; n <= exhaustive_n && !t.failed(); ++n) {
      const auto all = all_partitions(n);
      for (const auto& e : all) {
        axioms_on_single(ops, e, t);
        for (const auto& f : all) {
          axioms_on_pair(ops, e, f, t);
          for (const auto& g : all) axioms_on_triple(ops, e, f, g, t);
        }
      }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_cases && !t.failed(); ++i) {
      const auto e = random_partition(random_n, rng);
      const auto f = random_partition(random_n, rng);
      const auto g = random_partition(random_n, rng);
      axioms_on_single(ops, e, t);
      axioms_on_pair(ops, e, f, t);
      axioms_on_triple(ops, e, f, g, t);
    }
    t.fill(out, "all partitions n<=" + std::to_string(exhaustive_n) + ", " + std::to_string(random_cases) +
                    " random triples n=" + std::to_string(random_n));
  });
}

CheckOutcome check_join_chain_oracle(const LatticeOps& ops, std::size_t max_n) {
  return run_check("join-chain-oracle", [&](CheckOutcome& out) {
    Tally t;
    for (std::size_t n = 1; n <= max_n; ++n) {
      const auto all = all_partitions(n);
      for (const auto& e : all) {
        for (const auto& f : all) {
          t.expect(ops.join(e, f) == oracle::chain_closure_join(e, f), [&] {
            return "join differs from chain closure at E=" + brief(e) + " F=" + brief(f);
          });
        }
      }
    }
    t.fill(out, "all pairs n<=" + std::to_string(max_n));
  });
}

CheckOutcome check_atomistic(const LatticeOps& ops, std::size_t max_n) {
  return run_check("atomistic-recomposition", [&](CheckOutcome& out) {
    Tally t;
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (const auto& e : all_partitions(n)) {
        Partition folded = Partition::bottom(n);
        for (const auto& atom : atomistic_decomposition(e)) {
          const Partition a = atom.to_partition();
          t.expect(leq(a, e), [&] { return "atom not below E=" + brief(e); });
          folded = ops.join(folded, a);
        }
        t.expect(folded == e, [&] { return "join of atoms gives " + brief(folded) + " for E=" + brief(e); });
      }
    }
    t.fill(out, "all partitions n<=" + std::to_string(max_n));
  });
}

CheckOutcome check_smalleq_meet(const LatticeOps& ops, std::size_t cases, std::uint64_t seed) {
  return run_check("small-eq-meet", [&](CheckOutcome& out) {
    Tally t;
    std::mt19937_64 rng(seed);
    auto random_small = [&] {
      const std::size_t threshold = std::uniform_int_distribution<std::size_t>(0, 20)(rng);
      std::uniform_int_distribution<std::uint64_t> label(0, 4);
      std::vector<std::uint64_t> raw(threshold);
      for (auto& r : raw) r = label(rng);
      return SmallEq::from_raw(threshold, raw, label(rng));
    };
    for (std::size_t i = 0; i < cases; ++i) {
      const SmallEq a = random_small();
      const SmallEq b = random_small();
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 64)(rng);
      const SmallEq m = smalleq_meet(a, b);
      t.expect(smalleq_meet(a, a) == a, [&] { return "meet(A, A) != A"; });
      t.expect(m.threshold() == std::max(a.threshold(), b.threshold()), [&] { return "meet threshold is not the max"; });
      t.expect(smalleq_restrict(m, n) == ops.meet(smalleq_restrict(a, n), smalleq_restrict(b, n)), [&] {
        return "restrict(meet(A,B), " + std::to_string(n) + ") != meet of restrictions";
      });
    }
    t.fill(out, std::to_string(cases) + " random pairs");
  });
}

CheckOutcome check_decider_combinators(const LatticeOps& ops, std::size_t cases, std::uint64_t seed) {
  return run_check("decider-combinators", [&](CheckOutcome& out) {
    Tally t;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
      const Partition p1 = random_partition(n, rng);
      const Partition p2 = random_partition(n, rng);
      const DeciderEq d1 = partition_decider(p1, "P1");
      const DeciderEq d2 = partition_decider(p2, "P2");
      auto where = [&] { return " at P1=" + brief(p1) + " P2=" + brief(p2); };
      t.expect(restrict(meet_combinator(d1, d2), n) == ops.meet(p1, p2), [&] { return "meet combinator" + where(); });
      const DeciderEq complement = least_element_complement(d1);
      t.expect(restrict(complement, n) == ops.complement(p1), [&] { return "decider complement" + where(); });
      t.expect(is_equivalence_sampled(complement, n), [&] { return "complement not an equivalence" + where(); });
      const Partition joined = ops.join(p1, p2);
      for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = 0; k < n; ++k) {
          const auto search = bounded_join(d1, d2, m, k, n, 2 * n);
          const auto* chain = std::get_if<RelatedWitness>(&search);
          t.expect((chain != nullptr) == joined.related(m, k), [&] {
            return "bounded join on (" + std::to_string(m) + ", " + std::to_string(k) + ")" + where();
          });
          if (chain != nullptr) {
            t.expect(verify_chain(d1, d2, *chain) && chain->links() <= 2 * n, [&] { return "bad chain" + where(); });
          }
        }
      }
    }
    t.fill(out, std::to_string(cases) + " random partition pairs n<=10");
  });
}

CheckOutcome check_singular_complement(const LatticeOps& ops, std::size_t max_n) {
  return run_check("singular-complement", [&](CheckOutcome& out) {
    Tally t;
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
      const auto all = all_partitions(n);
      for (const auto& e : all) {
        if (!is_singular(e)) continue;
        for (const auto& f : all) {
          ++pairs;
          t.expect(singular_complement_valid(e, f) == ops_is_complement(ops, e, f), [&] {
            return "characterization disagrees with is_complement at E=" + brief(e) + " F=" + brief(f);
          });
        }
      }
    }
    t.fill(out, std::to_string(pairs) + " (singular E, F) pairs n<=" + std::to_string(max_n));
  });
}

CheckOutcome check_least_element_complement(const LatticeOps& ops, std::size_t exhaustive_n, const std::vector<std::size_t>& random_ns,
                            std::size_t random_cases, std::uint64_t seed) {
  return run_check("least-element-complement", [&](CheckOutcome& out) {
    Tally t;
    auto check = [&](const Partition& e) {
      const Partition c = ops.complement(e);
      t.expect(ops_is_complement(ops, e, c), [&] { return "not a complement: E=" + brief(e) + " C=" + brief(c); });
      std::vector<std::size_t> least;
      for (std::size_t x = 0; x < e.universe_size(); ++x) {
        if (e.class_of(x) == x) least.push_back(x);
      }
      t.expect(c == oracle::singular(e.universe_size(), least),
               [&] { return "big class is not the least elements: E=" + brief(e) + " C=" + brief(c); });
    };
    for (std::size_t n = 1; n <= exhaustive_n; ++n) for_each_partition(n, check);
    std::mt19937_64 rng(seed);
    for (std::size_t n : random_ns) {
      for (std::size_t i = 0; i < random_cases; ++i) check(random_partition(n, rng));
    }
    std::string sizes;
    for (std::size_t n : random_ns) sizes += (sizes.empty() ? "" : ",") + std::to_string(n);
    t.fill(out, "all partitions n<=" + std::to_string(exhaustive_n) + ", " + std::to_string(random_cases) +
                    " random at n in {" + sizes + "}");
  });
}

CheckOutcome check_class_bound_and_checkers(const std::vector<NamedRelation>& corpus,
                                      const std::vector<NamedDfa>& non_equivalences, std::size_t bound) {
  return run_check("class-bound-and-axiom-checkers", [&](CheckOutcome& out) {
    Tally t;
    std::vector<NamedDfa> all = non_equivalences;
    for (const auto& r : corpus) {
      t.expect(r.relation.class_count() <= r.relation.dfa().state_count(), [&] {
        return r.name + ": " + std::to_string(r.relation.class_count()) + " classes exceed " +
               std::to_string(r.relation.dfa().state_count()) + " states";
      });
      t.expect(minimize(r.relation.dfa()).state_count() == r.relation.dfa().state_count(),
               [&] { return r.name + ": stored automaton is not minimal"; });
      all.push_back({r.name, r.relation.dfa()});
    }
    for (const auto& [name, d] : all) {
      const auto m = oracle::dfa_matrix(d, bound);
      t.expect(check_reflexive(d) == oracle::reflexive(m), [&, n = name] { return n + ": reflexivity checker"; });
      t.expect(check_symmetric(d) == oracle::symmetric(m), [&, n = name] { return n + ": symmetry checker"; });
      t.expect(check_transitive(d) == oracle::transitive(m), [&, n = name] { return n + ": transitivity checker"; });
    }
    t.fill(out, std::to_string(corpus.size()) + " corpus relations + " + std::to_string(non_equivalences.size()) +
                    " non-equivalences, brute force below " + std::to_string(bound));
  });
}

CheckOutcome check_automatic_restriction(const LatticeOps& ops, const std::vector<NamedRelation>& corpus,
                                         std::size_t n) {
  return run_check("automatic-lattice-restriction", [&](CheckOutcome& out) {
    Tally t;
    std::vector<Partition> restricted;
    for (const auto& r : corpus) restricted.push_back(r.relation.restrict(n));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t j = 0; j < corpus.size(); ++j) {
        const auto& a = corpus[i].relation;
        const auto& b = corpus[j].relation;
        const std::string pair = corpus[i].name + ", " + corpus[j].name;
        t.expect(meet(a, b).restrict(n) == ops.meet(restricted[i], restricted[j]), [&] { return "meet(" + pair + ")"; });
        const auto cutoff = static_cast<std::size_t>(std::max<std::uint64_t>(n, analyze_join(a, b).restriction_cutoff));
        const Partition expected = ops.join(a.restrict(cutoff), b.restrict(cutoff)).prefix(n);
        t.expect(join(a, b).restrict(n) == expected, [&] { return "join(" + pair + ")"; });
      }
    }
    t.fill(out, std::to_string(corpus.size() * corpus.size()) + " ordered pairs on {0.." + std::to_string(n - 1) + "}");
  });
}

CheckOutcome check_meet_growth(std::size_t max_k) {
  return run_check("automatic-meet-growth", [&](CheckOutcome& out) {
    Tally t;
    const auto counts = family_meet_demo(max_k);
    t.expect(counts.size() == max_k, [&] { return "wrong number of counts"; });
    for (std::size_t k = 1; k <= counts.size(); ++k) {
      t.expect(counts[k - 1] == k + 1, [&] {
        return "k=" + std::to_string(k) + ": " + std::to_string(counts[k - 1]) + " classes, expected " +
               std::to_string(k + 1);
      });
    }
    AutomaticEq folded = singleton_family(1);
    for (std::uint64_t i = 2; i <= max_k; ++i) folded = meet(folded, singleton_family(i));
    const std::size_t n = max_k + 8;
    std::vector<std::size_t> labels(n, 0);
    for (std::size_t x = 1; x <= max_k; ++x) labels[x] = x;
    t.expect(folded.restrict(n) == Partition::from_labels(labels), [&] { return "folded meet restriction"; });
    t.fill(out, "k=1.." + std::to_string(max_k));
  });
}

CheckOutcome check_coarsen(const std::vector<NamedRelation>& corpus) {
  return run_check("automatic-coarsen", [&](CheckOutcome& out) {
    Tally t;
    constexpr std::size_t n = 64;
    for (const auto& r : corpus) {
      const auto& a = r.relation;
      if (a.class_count() > 5) continue;
      const Partition fine = a.restrict(n);
      for (const auto& g : all_partitions(a.class_count())) {
        const AutomaticEq c = coarsen(a, g);
        std::vector<std::size_t> labels(n);
        for (std::size_t x = 0; x < n; ++x) labels[x] = g.class_of(a.class_index(x));
        const Partition coarse = c.restrict(n);
        t.expect(c.class_count() == g.class_count(), [&] { return r.name + ": class count after coarsen " + brief(g); });
        t.expect(coarse == Partition::from_labels(labels), [&] { return r.name + ": classes after coarsen " + brief(g); });
        t.expect(leq(fine, coarse), [&] { return r.name + ": coarsen " + brief(g) + " is not above"; });
      }
    }
    t.fill(out, "every grouping of every corpus relation with <= 5 classes");
  });
}

CheckOutcome check_representatives(const std::vector<NamedRelation>& corpus) {
  return run_check("automatic-representatives", [&](CheckOutcome& out) {
    Tally t;
    constexpr std::uint64_t scan = 1024;
    for (const auto& r : corpus) {
      std::vector<std::uint64_t> found;
      for (std::uint64_t x = 0; x < scan; ++x) {
        const bool known = std::any_of(found.begin(), found.end(), [&](std::uint64_t y) { return r.relation.decide(x, y); });
        if (!known) found.push_back(x);
      }
      const auto reps = r.relation.representatives();
      t.expect(std::equal(found.begin(), found.end(), reps.begin(), reps.end()),
               [&] { return r.name + ": representatives differ from a scan below 1024"; });
    }
    t.fill(out, std::to_string(corpus.size()) + " relations");
  });
}

CheckOutcome check_corpus_builtins(const std::vector<NamedRelation>& corpus) {
  return run_check("automatic-corpus", [&](CheckOutcome& out) {
    Tally t;
    t.expect(corpus.size() >= 8, [&] { return "corpus has only " + std::to_string(corpus.size()) + " relations"; });
    const auto names = builtin_relation_names();
    for (const auto& r : corpus) {
      if (std::find(names.begin(), names.end(), r.name) == names.end()) continue;
      t.expect(equivalent(r.relation.dfa(), builtin_relation_dfa(r.name)),
               [&] { return r.name + ": file differs from the built-in"; });
    }
    t.fill(out, std::to_string(corpus.size()) + " shipped relations");
  });
}

CheckOutcome check_halting_probe(const std::vector<NamedMachine>& zoo, std::size_t bound) {
  return run_check("halting-probe", [&](CheckOutcome& out) {
    Tally t;
    std::size_t halting = 0;
    std::size_t running = 0;
    std::vector<std::pair<const NamedMachine*, std::string>> cases;
    for (const auto& m : zoo) {
      cases.emplace_back(&m, "");
      if (m.name == "incrementer") cases.emplace_back(&m, "11");
    }
    for (const auto& [machine, input] : cases) {
      const TmSpec& m = machine->spec;
      const std::string label = machine->name + " on \"" + input + "\"";
      const Configuration init = initial_configuration(m, input);
      const SimulationResult sim = simulate(m, init, bound);
      if (input.empty()) (sim.halted ? halting : running) += 1;
      const ProbeResult probe = halting_probe(m, input, bound);
      const auto* halts = std::get_if<HaltsInSteps>(&probe);
      t.expect((halts != nullptr) == sim.halted, [&] { return label + ": probe verdict differs from simulation"; });
      if (halts == nullptr || !sim.halted) continue;
      t.expect(halts->steps == sim.steps, [&] {
        return label + ": probe says " + std::to_string(halts->steps) + " steps, simulation " + std::to_string(sim.steps);
      });
      const ClockedMachine cm(m);
      const ProbeBounds bounds = probe_bounds(cm, init, bound);
      const auto& chain = halts->chain;
      t.expect(verify_chain(approx_even(cm), approx_odd(cm), chain), [&] { return label + ": chain does not verify"; });
      t.expect(chain.chain.front() == cm.pack(0, init) && chain.chain.back() == ClockedMachine::sink(),
               [&] { return label + ": chain endpoints"; });
      t.expect(chain.links() <= bounds.chain_bound, [&] { return label + ": chain too long"; });
      t.expect(std::all_of(chain.chain.begin(), chain.chain.end(),
                           [&](const Natural& x) { return x < bounds.universe_bound; }),
               [&] { return label + ": chain leaves the universe bound"; });
    }
    t.expect(zoo.size() >= 10, [&] { return "zoo has only " + std::to_string(zoo.size()) + " machines"; });
    t.expect(halting >= 3 && running >= 3, [&] {
      return "zoo needs >= 3 halting and >= 3 running machines, has " + std::to_string(halting) + " and " +
             std::to_string(running);
    });
    t.fill(out, std::to_string(cases.size()) + " runs at bound " + std::to_string(bound) + " (" +
                    std::to_string(halting) + " halting, " + std::to_string(running) + " running)");
  });
}

CheckOutcome check_approx_closure(const std::vector<NamedMachine>& zoo, std::size_t steps) {
  return run_check("approx-closure", [&](CheckOutcome& out) {
    Tally t;
    for (const auto& named : zoo) {
      const ClockedMachine cm(named.spec);
      // Forward run, every predecessor of a run point, and the sink: each
      // point's successor is in the set, so closure inside it is exact.
      std::vector<Natural> points{ClockedMachine::sink()};
      Configuration c = initial_configuration(named.spec, "");
      std::vector<Natural> run;
      for (std::size_t n = 0; n <= steps; ++n) {
        run.push_back(cm.pack(n, c));
        const auto next = step(named.spec, c);
        if (!next) break;
        c = *next;
      }
      for (const auto& x : run) {
        points.push_back(x);
        for (Parity p : {Parity::kEven, Parity::kOdd}) {
          for (const auto& y : cm.predecessors(p, x)) points.push_back(y);
        }
      }
      std::sort(points.begin(), points.end());
      points.erase(std::unique(points.begin(), points.end()), points.end());
      for (Parity p : {Parity::kEven, Parity::kOdd}) {
        const DeciderEq approx = approx_parity(cm, p);
        const auto ids = oracle::components(points, [&](const Natural& x, const Natural& y) {
          const auto s = cm.successor(p, x);
          return s && *s == y;
        });
        for (std::size_t i = 0; i < points.size(); ++i) {
          if (const auto s = cm.successor(p, points[i])) {
            t.expect(!cm.successor(p, *s), [&] { return named.name + ": two consecutive " + to_string(p) + " edges"; });
          }
          for (std::size_t j = 0; j < points.size(); ++j) {
            t.expect(approx(points[i], points[j]) == (ids[i] == ids[j]), [&] {
              return named.name + ": approx-" + to_string(p) + " differs from the closure on " + to_string(points[i]) +
                     ", " + to_string(points[j]);
            });
          }
        }
      }
    }
    t.fill(out, std::to_string(zoo.size()) + " machines, " + std::to_string(steps) + "-step runs");
  });
}

CheckOutcome check_pack_roundtrip(const std::vector<NamedMachine>& zoo) {
  return run_check("pack-roundtrip", [&](CheckOutcome& out) {
    Tally t;
    t.expect(cantor_unpack(0) == std::make_pair(Natural(0), Natural(0)), [] { return "0 is not the pair (0, 0)"; });
    for (std::uint64_t x = 0; x < 2000; ++x) {
      const auto [n, c] = cantor_unpack(x);
      t.expect(cantor_pack(n, c) == x, [&] { return "pack(unpack(" + std::to_string(x) + "))"; });
    }
    for (const auto& named : zoo) {
      const ClockedMachine cm(named.spec);
      t.expect(!cm.decode(ClockedMachine::sink()), [&] { return named.name + ": sink decodes to a configuration"; });
      Configuration c = initial_configuration(named.spec, "");
      for (std::size_t n = 0; n < 50; ++n) {
        const Natural code = encode_configuration(named.spec, c);
        t.expect(code >= 1, [&] { return named.name + ": configuration code 0"; });
        t.expect(decode_configuration(named.spec, code) == c, [&] { return named.name + ": configuration round trip"; });
        const auto d = cm.decode(cm.pack(n, c));
        t.expect(d && d->clock == n && d->config == c, [&] { return named.name + ": point round trip"; });
        const auto next = step(named.spec, c);
        if (!next) break;
        c = *next;
      }
      for (std::uint64_t code = 0; code < 3000; ++code) {
        if (const auto d = decode_configuration(named.spec, code)) {
          t.expect(encode_configuration(named.spec, *d) == code,
                   [&] { return named.name + ": code " + std::to_string(code) + " does not re-encode"; });
        }
      }
      t.expect(decode_machine(machine_code(named.spec)) == named.spec, [&] { return named.name + ": machine code"; });
    }
    t.fill(out, std::to_string(zoo.size()) + " machines");
  });
}

CheckOutcome check_nonhalt_family(const std::vector<NamedMachine>& zoo, const std::vector<std::size_t>& ks) {
  return run_check("nonhalt-family", [&](CheckOutcome& out) {
    Tally t;
    std::vector<Natural> codes;
    for (const auto& m : zoo) codes.push_back(machine_code(m.spec));
    std::string covered;
    for (std::size_t k : ks) {
      std::vector<std::size_t> running;
      for (std::size_t i = 0; i < zoo.size(); ++i) {
        if (!simulate(zoo[i].spec, initial_configuration(zoo[i].spec, ""), k).halted) running.push_back(i);
      }
      const Partition meet_k = nonhalt_family_meet(k, codes);
      t.expect(meet_k == oracle::singular(zoo.size(), running), [&] {
        return "K=" + std::to_string(k) + ": meet " + brief(meet_k) + " vs simulation";
      });
      covered += (covered.empty() ? "" : ", ") + std::string("K=") + std::to_string(k) + ": " +
                 std::to_string(running.size()) + " running";
    }
    t.fill(out, covered);
  });
}

CheckOutcome check_nonhalt_monotone(const std::vector<NamedMachine>& zoo, std::size_t max_n) {
  return run_check("nonhalt-monotone", [&](CheckOutcome& out) {
    Tally t;
    std::vector<Natural> codes;
    for (const auto& m : zoo) codes.push_back(machine_code(m.spec));
    Partition previous = restrict_to(nonhalt_eq(1), codes);
    for (std::size_t n = 2; n <= max_n; ++n) {
      const Partition current = restrict_to(nonhalt_eq(n), codes);
      t.expect(leq(current, previous), [&] { return "nonhalt(" + std::to_string(n) + ") is not below its predecessor"; });
      previous = current;
    }
    t.fill(out, "n=1.." + std::to_string(max_n));
  });
}

CheckOutcome check_family_meet(std::size_t max_k, std::uint64_t seed) {
  return run_check("family-meet", [&](CheckOutcome& out) {
    Tally t;
    std::mt19937_64 rng(seed);
    std::string bits;
    for (int i = 0; i < 256; ++i) bits.push_back(rng() % 2 ? '1' : '0');
    const std::vector<std::pair<std::string, Predicate>> predicates = {
        {"even", named_predicate("even")}, {"prime", named_predicate("prime")}, {"bitmask", bitmask_predicate(bits)}};
    std::vector<std::uint64_t> linear, fib{1, 2, 3, 5, 8, 13, 21};
    for (std::uint64_t i = 1; i <= 7; ++i) linear.push_back(3 * i);
    const std::vector<std::vector<std::uint64_t>> cut_sequences = {default_cuts(7), linear, fib};
    for (const auto& [pname, predicate] : predicates) {
      for (const auto& cuts : cut_sequences) {
        const SingularFamilySpec spec{predicate, cuts};
        const std::size_t span = static_cast<std::size_t>(cuts.at(max_k)) + 16;
        std::optional<Partition> previous;
        for (std::size_t k = 0; k <= max_k; ++k) {
          const std::string where = pname + " cuts up to " + std::to_string(cuts.back()) + " K=" + std::to_string(k);
          const SmallEq member = family_member(spec, k);
          t.expect(is_singular(smalleq_restrict(member, static_cast<std::size_t>(cuts[k]) + 2)),
                   [&] { return where + ": member is not singular"; });
          const SmallEq folded = truncated_family_meet(spec, k);
          t.expect(folded == family_closed_form(spec, k), [&] { return where + ": meet differs from closed form"; });
          std::vector<std::size_t> members;
          for (std::size_t x = 0; x < span; ++x) {
            if (x >= cuts[k] || predicate(x)) members.push_back(x);
          }
          const Partition restricted = smalleq_restrict(folded, span);
          t.expect(restricted == oracle::singular(span, members), [&] { return where + ": restriction"; });
          if (previous) t.expect(leq(restricted, *previous), [&] { return where + ": not below K-1"; });
          previous = restricted;
        }
      }
    }
    t.fill(out, "3 predicates x 3 cut sequences, K=0.." + std::to_string(max_k));
  });
}

CheckOutcome check_atoms_to_singular(std::size_t cases, std::size_t max_n, std::uint64_t seed) {
  return run_check("atoms-to-singular", [&](CheckOutcome& out) {
    Tally t;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < cases; ++i) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
      std::vector<Element> members;
      while (members.size() < 2) {
        members.clear();
        for (std::size_t x = 0; x < n; ++x) {
          if (rng() % 2) members.push_back(x);
        }
      }
      const Partition p = atoms_to_singular(members, n);
      t.expect(p == oracle::singular(n, members), [&] { return "atoms_to_singular gives " + brief(p); });
      for (const auto& atom : star_atoms(members, n)) {
        t.expect(leq(atom.to_partition(), p), [&] { return "atom above the result " + brief(p); });
      }
    }
    t.fill(out, std::to_string(cases) + " random sets, n<=" + std::to_string(max_n));
  });
}

std::vector<std::string> suite_names() { return {"lattice", "complements", "automatic", "tm", "constructions"}; }

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const LatticeOps& ops = options.ops;
  const std::uint64_t seed = options.seed;
  SuiteReport report{name, {}};
  auto& c = report.checks;
  if (name == "lattice") {
    c.push_back(check_lattice_axioms(ops, 5, 10, 10000, seed));
    c.push_back(check_join_chain_oracle(ops, 5));
    c.push_back(check_atomistic(ops, 6));
    c.push_back(check_smalleq_meet(ops, 300, seed));
    c.push_back(check_decider_combinators(ops, 100, seed));
  } else if (name == "complements") {
    c.push_back(check_singular_complement(ops, 5));
    c.push_back(check_least_element_complement(ops, 7, {6, 7, 12}, 10000, seed));
  } else if (name == "automatic") {
    std::vector<NamedRelation> corpus;
    c.push_back(run_check("automatic-corpus-load", [&](CheckOutcome& out) {
      corpus = load_automatic_corpus();
      out.passed = true;
      out.detail = std::to_string(corpus.size()) + " relations validated";
    }));
    c.push_back(check_corpus_builtins(corpus));
    c.push_back(check_class_bound_and_checkers(corpus, non_equivalence_dfas(), 64));
    c.push_back(check_automatic_restriction(ops, corpus, 64));
    c.push_back(check_meet_growth(16));
    c.push_back(check_coarsen(corpus));
    c.push_back(check_representatives(corpus));
  } else if (name == "tm") {
    std::vector<NamedMachine> zoo;
    c.push_back(run_check("zoo-load", [&](CheckOutcome& out) {
      zoo = load_zoo();
      out.passed = true;
      out.detail = std::to_string(zoo.size()) + " machines";
    }));
    c.push_back(check_pack_roundtrip(zoo));
    c.push_back(check_approx_closure(zoo, 10));
    c.push_back(check_halting_probe(zoo, 1000));
    c.push_back(check_nonhalt_family(zoo, {1, 10, 100}));
    c.push_back(check_nonhalt_monotone(zoo, 30));
  } else if (name == "constructions") {
    c.push_back(check_family_meet(6, seed));
    c.push_back(check_atoms_to_singular(1000, 10, seed));
  } else {
    throw Error(ErrorKind::kInvalidArgument, "unknown suite `" + name + "`");
  }
  return report;
}

std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& options) {
  std::vector<SuiteReport> reports;
  if (name == "all") {
    for (const auto& suite : suite_names()) reports.push_back(run_suite(suite, options));
  } else {
    reports.push_back(run_suite(name, options));
  }
  return reports;
}

std::string format_outcome(const CheckOutcome& outcome) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.2f s", outcome.seconds);
  return std::string(outcome.passed ? "PASS" : "FAIL") + "  " + outcome.name + "  (" + outcome.detail + "; " +
         seconds + ")";
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << '\n';
  for (const auto& c : report.checks) out << "  " << format_outcome(c) << '\n';
  out << "  => " << (report.passed() ? "all passed" : "FAILED") << '\n';
  return out.str();
}

}  // namespace equlat::checks
