#include "equlat/clocked.hpp"

#include <algorithm>

#include "equlat/error.hpp"

namespace equlat {

Natural cantor_pack(const Natural& n, const Natural& c) {
  const Natural s = n + c;
  return s * (s + 1) / 2 + c;
}

std::pair<Natural, Natural> cantor_unpack(const Natural& x) {
  const Natural w = (boost::multiprecision::sqrt(Natural(8 * x + 1)) - 1) / 2;
  const Natural c = x - w * (w + 1) / 2;
  return {w - c, c};
}

ClockedPoint make_point(const Natural& clock, const Natural& config_code) {
  return {clock, config_code, cantor_pack(clock, config_code)};
}

ClockedPoint unpack_point(const Natural& packed) {
  auto [clock, code] = cantor_unpack(packed);
  return {std::move(clock), std::move(code), packed};
}

Parity parity_of(const Natural& n) { return bit_test(n, 0) ? Parity::kOdd : Parity::kEven; }

const char* to_string(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

Natural ClockedMachine::pack(const Natural& clock, const Configuration& c) const {
  return cantor_pack(clock, encode_configuration(machine_, c));
}

std::optional<ClockedMachine::Decoded> ClockedMachine::decode(const Natural& x) const {
  if (x == 0) return std::nullopt;
  auto [clock, code] = cantor_unpack(x);
  auto config = decode_configuration(machine_, code);
  if (!config) return std::nullopt;
  return Decoded{std::move(clock), std::move(*config)};
}

std::optional<Natural> ClockedMachine::successor(const Natural& x) const {
  const auto d = decode(x);
  if (!d) return std::nullopt;
  const auto next = step(machine_, d->config);
  if (!next) return sink();
  return pack(d->clock + 1, *next);
}

std::optional<Natural> ClockedMachine::successor(Parity p, const Natural& x) const {
  if (x == 0) return std::nullopt;
  if (parity_of(cantor_unpack(x).first) != p) return std::nullopt;
  return successor(x);
}

std::vector<Natural> ClockedMachine::predecessors(Parity p, const Natural& y) const {
  if (y == 0) throw Error(ErrorKind::kInvalidArgument, "the sink has unboundedly many predecessors");
  std::vector<Natural> found;
  const auto d = decode(y);
  if (!d || d->clock == 0) return found;
  const Natural clock = d->clock - 1;
  if (parity_of(clock) != p) return found;
  for (const auto& c : equlat::predecessors(machine_, d->config)) found.push_back(pack(clock, c));
  return found;
}

bool ClockedMachine::steps_to(const Natural& x, const Natural& y) const {
  const auto next = successor(x);
  return next && *next == y;
}

DeciderEq::Procedure clocked_step(const ClockedMachine& cm) {
  return [cm](const Natural& x, const Natural& y) { return cm.steps_to(x, y); };
}

DeciderEq approx_parity(const ClockedMachine& cm, Parity p) {
  DeciderEq d = DeciderEq::make(
      std::string("approx-") + to_string(p),
      [cm, p](const Natural& x, const Natural& y) {
        if (x == y) return true;
        const auto sx = cm.successor(p, x);
        if (sx && *sx == y) return true;
        const auto sy = cm.successor(p, y);
        if (sy && *sy == x) return true;
        return sx && sy && *sx == *sy;
      },
      "two decodes and at most two machine steps per query");
  return d.with_enumerator([cm, p](const Natural& x, const Natural& bound) {
    ClassMembers found;
    if (x != 0 && !cm.decode(x)) return found;  // invalid codes are singletons
    const Natural target = cm.successor(p, x).value_or(x);
    if (target == 0) {
      if (x != 0) found.members.push_back(0);
      found.complete = false;
      return found;
    }
    if (target != x && target < bound) found.members.push_back(target);
    for (auto& y : cm.predecessors(p, target)) {
      if (y != x && y < bound) found.members.push_back(std::move(y));
    }
    return found;
  });
}

DeciderEq approx_even(const ClockedMachine& cm) { return approx_parity(cm, Parity::kEven); }
DeciderEq approx_odd(const ClockedMachine& cm) { return approx_parity(cm, Parity::kOdd); }

ProbeBounds probe_bounds(const ClockedMachine& cm, const Configuration& init, std::size_t step_bound) {
  Natural largest = 0;
  Configuration c = init;
  for (std::size_t n = 0;; ++n) {
    largest = std::max(largest, cm.pack(n, c));
    if (n == step_bound) break;
    auto next = step(cm.machine(), c);
    if (!next) break;
    c = std::move(*next);
  }
  return {largest + 1, 2 * step_bound + 2};
}

ProbeResult halting_probe(const TmSpec& m, std::string_view input, std::size_t step_bound) {
  const ClockedMachine cm(m);
  const Configuration init = initial_configuration(m, input);
  const ProbeBounds bounds = probe_bounds(cm, init, step_bound);
  const JoinSearch search = bounded_join(approx_even(cm), approx_odd(cm), cm.pack(0, init), ClockedMachine::sink(),
                                         bounds.universe_bound, bounds.chain_bound);
  if (const auto* witness = std::get_if<RelatedWitness>(&search)) {
    const std::size_t steps = witness->links() - 1;
    if (steps <= step_bound) return HaltsInSteps{steps, *witness};
    return NoHaltWithinBound{witness->chain.size(), false};
  }
  const auto& miss = std::get<NotWithinBounds>(search);
  return NoHaltWithinBound{miss.explored, miss.exhaustive};
}

DeciderEq nonhalt_eq(std::size_t n) {
  auto runs_past = [n](const Natural& code) {
    const auto m = decode_machine(code);
    if (!m) return false;
    return !simulate(*m, initial_configuration(*m, ""), n).halted;
  };
  return DeciderEq::make(
      "nonhalt(" + std::to_string(n) + ")",
      [runs_past](const Natural& a, const Natural& b) { return a == b || (runs_past(a) && runs_past(b)); },
      "decodes both machines and simulates each for at most " + std::to_string(n) + " steps");
}

Partition nonhalt_family_meet(std::size_t k, std::span<const Natural> machine_codes) {
  Partition result = Partition::top(machine_codes.size());
  for (std::size_t n = 1; n <= k; ++n) result = meet(result, restrict_to(nonhalt_eq(n), machine_codes));
  return result;
}

}  // namespace equlat
