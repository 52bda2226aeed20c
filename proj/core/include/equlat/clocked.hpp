#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "equlat/decider.hpp"
#include "equlat/natural.hpp"
#include "equlat/partition.hpp"
#include "equlat/tm.hpp"

namespace equlat {

// Cantor pairing (n + c)(n + c + 1)/2 + c and its inverse.
Natural cantor_pack(const Natural& n, const Natural& c);
std::pair<Natural, Natural> cantor_unpack(const Natural& x);

// ⟨clock, configuration code⟩ with its packed natural. Configuration codes
// are ≥ 1, so the packed value 0 = ⟨0, 0⟩ is free for the sink.
struct ClockedPoint {
  Natural clock;
  Natural config_code;
  Natural packed;
};

ClockedPoint make_point(const Natural& clock, const Natural& config_code);
ClockedPoint unpack_point(const Natural& packed);

enum class Parity { kEven, kOdd };

Parity parity_of(const Natural& n);
const char* to_string(Parity p);

// The clocked one-step graph of a machine over packed points:
//   ⟨n, c⟩ → ⟨n+1, step(c)⟩   for non-final c,
//   ⟨n, c⟩ → 0               for final c.
// An edge has the parity of its source clock. Naturals that do not decode
// to a point have no edges.
class ClockedMachine {
 public:
  explicit ClockedMachine(TmSpec machine) : machine_(std::move(machine)) {}

  const TmSpec& machine() const noexcept { return machine_; }

  static Natural sink() { return 0; }

  Natural pack(const Natural& clock, const Configuration& c) const;

  struct Decoded {
    Natural clock;
    Configuration config;
  };
  // Nothing for the sink and for invalid codes.
  std::optional<Decoded> decode(const Natural& x) const;

  std::optional<Natural> successor(const Natural& x) const;
  std::optional<Natural> successor(Parity p, const Natural& x) const;
  // Sources of the `p`-edges into y (y ≠ sink).
  std::vector<Natural> predecessors(Parity p, const Natural& y) const;

  bool steps_to(const Natural& x, const Natural& y) const;

 private:
  TmSpec machine_;
};

// The one-step relation as a predicate on packed codes.
DeciderEq::Procedure clocked_step(const ClockedMachine& cm);

// Equivalence closure of the p-edges. Each point has at most one outgoing
// p-edge and no p-edge leaves a p-edge target, so the classes are stars:
// x ~ y iff x = y, x → y, y → x, or x and y step to the same point. The
// class enumerator is complete except for the sink's class, which holds
// infinitely many final points.
DeciderEq approx_parity(const ClockedMachine& cm, Parity p);
DeciderEq approx_even(const ClockedMachine& cm);
DeciderEq approx_odd(const ClockedMachine& cm);

struct ProbeBounds {
  Natural universe_bound;   // 1 + the largest point of the run within the step bound
  std::size_t chain_bound;  // 2 * step_bound + 2
};

ProbeBounds probe_bounds(const ClockedMachine& cm, const Configuration& init, std::size_t step_bound);

struct HaltsInSteps {
  std::size_t steps = 0;
  RelatedWitness chain;
};

struct NoHaltWithinBound {
  std::size_t explored = 0;
  bool exhaustive = true;
};

using ProbeResult = std::variant<HaltsInSteps, NoHaltWithinBound>;

// Bounded join search from ⟨0, init(input)⟩ to the sink through approx_even
// and approx_odd. A chain of k + 1 links is a halt after k steps; halts
// after more than step_bound steps are reported as NoHaltWithinBound.
ProbeResult halting_probe(const TmSpec& m, std::string_view input, std::size_t step_bound);

// Machines (by machine_code) that do not halt within n steps on the empty
// tape form the one big class; every other natural is a singleton.
DeciderEq nonhalt_eq(std::size_t n);

// Meet of nonhalt_eq(1..K) restricted to `machine_codes`, as a partition of
// their indices.
Partition nonhalt_family_meet(std::size_t k, std::span<const Natural> machine_codes);

}  // namespace equlat
