#include "equlat/decider.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "equlat/error.hpp"

namespace equlat {

DeciderEq::DeciderEq(std::string name, Procedure decide, std::string cost_note)
    : name_(std::move(name)),
      decide_(std::make_shared<const Procedure>(std::move(decide))),
      cost_note_(std::move(cost_note)) {}

DeciderEq DeciderEq::make(std::string name, Procedure decide, std::string cost_note, std::size_t check_bound) {
  if (const auto violation = first_axiom_violation(decide, check_bound)) {
    throw Error(ErrorKind::kNotEquivalence, name + ": " + *violation);
  }
  return DeciderEq(std::move(name), std::move(decide), std::move(cost_note));
}

DeciderEq DeciderEq::make_unchecked(std::string name, Procedure decide, std::string cost_note) {
  return DeciderEq(std::move(name), std::move(decide), std::move(cost_note));
}

DeciderEq DeciderEq::with_enumerator(Enumerator enumerate) const {
  DeciderEq copy = *this;
  copy.enumerate_ = std::make_shared<const Enumerator>(std::move(enumerate));
  return copy;
}

DeciderEq DeciderEq::with_universe_hint(Natural hint) const {
  DeciderEq copy = *this;
  copy.universe_hint_ = std::move(hint);
  return copy;
}

std::optional<std::string> first_axiom_violation(const DeciderEq::Procedure& decide, std::size_t bound) {
  std::vector<std::vector<bool>> related(bound, std::vector<bool>(bound));
  for (std::size_t x = 0; x < bound; ++x) {
    for (std::size_t y = 0; y < bound; ++y) related[x][y] = decide(Natural(x), Natural(y));
  }
  for (std::size_t x = 0; x < bound; ++x) {
    if (!related[x][x]) return "not reflexive at " + std::to_string(x);
  }
  for (std::size_t x = 0; x < bound; ++x) {
    for (std::size_t y = 0; y < bound; ++y) {
      if (related[x][y] != related[y][x]) {
        return "not symmetric at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
      }
    }
  }
  for (std::size_t x = 0; x < bound; ++x) {
    for (std::size_t y = 0; y < bound; ++y) {
      if (!related[x][y]) continue;
      for (std::size_t z = 0; z < bound; ++z) {
        if (related[y][z] && !related[x][z]) {
          return "not transitive at (" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

bool is_equivalence_sampled(const DeciderEq::Procedure& decide, std::size_t bound) {
  return !first_axiom_violation(decide, bound).has_value();
}

bool is_equivalence_sampled(const DeciderEq& d, std::size_t bound) {
  return is_equivalence_sampled(d.procedure(), bound);
}

Partition restrict(const DeciderEq& d, std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t least = x;
    for (std::size_t y = 0; y < x; ++y) {
      if (d(Natural(y), Natural(x))) {
        least = y;
        break;
      }
    }
    labels[x] = least;
  }
  return Partition::from_labels(labels);
}

Partition restrict_to(const DeciderEq& d, std::span<const Natural> points) {
  std::vector<std::size_t> labels(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::size_t least = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (d(points[j], points[i])) {
        least = j;
        break;
      }
    }
    labels[i] = least;
  }
  return Partition::from_labels(labels);
}

DeciderEq bottom_decider() {
  return DeciderEq::make(
      "bottom", [](const Natural& m, const Natural& n) { return m == n; }, "equality test, logspace");
}

DeciderEq top_decider() {
  return DeciderEq::make(
      "top", [](const Natural&, const Natural&) { return true; }, "constant");
}

DeciderEq parity_decider() {
  return DeciderEq::make(
      "parity", [](const Natural& m, const Natural& n) { return bit_test(m, 0) == bit_test(n, 0); },
      "compares last bits, logspace");
}

DeciderEq partition_decider(const Partition& p, std::string name) {
  const std::size_t size = p.universe_size();
  return DeciderEq::make(
      std::move(name),
      [p, size](const Natural& m, const Natural& n) {
        if (m < size && n < size) return p.related(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
        return m == n;
      },
      "table lookup");
}

DeciderEq singular_from_predicate(std::string name, std::function<bool(const Natural&)> p, std::string cost_note) {
  return DeciderEq::make(
      "singular(" + name + ")",
      [p = std::move(p)](const Natural& m, const Natural& n) { return m == n || (p(m) && p(n)); },
      std::move(cost_note));
}

DeciderEq meet_combinator(const DeciderEq& a, const DeciderEq& b) {
  DeciderEq result = DeciderEq::make(
      "meet(" + a.name() + ", " + b.name() + ")",
      [a, b](const Natural& m, const Natural& n) { return a(m, n) && b(m, n); },
      "(" + a.cost_note() + ") && (" + b.cost_note() + ")");
  // Enumerate through whichever side can, filtering by the other.
  const DeciderEq* source = a.enumerator() ? &a : (b.enumerator() ? &b : nullptr);
  if (source == nullptr) return result;
  const DeciderEq& other = source == &a ? b : a;
  return result.with_enumerator([enumerate = *source->enumerator(), other](const Natural& x, const Natural& bound) {
    ClassMembers found = enumerate(x, bound);
    std::erase_if(found.members, [&](const Natural& y) { return !other(x, y); });
    return found;
  });
}

DeciderEq least_element_complement(const DeciderEq& d) {
  auto has_smaller_equivalent = [d](const Natural& x) {
    for (Natural k = 0; k < x; ++k) {
      if (d(k, x)) return true;
    }
    return false;
  };
  return DeciderEq::make(
      "complement(" + d.name() + ")",
      [has_smaller_equivalent](const Natural& m, const Natural& n) {
        if (m == n) return true;                        // (i)
        if (has_smaller_equivalent(m)) return false;    // (ii)
        if (has_smaller_equivalent(n)) return false;    // (iii)
        return true;                                    // (iv)
      },
      "linear space, exponential time: loops over all k < m with calls to " + d.name());
}

namespace {

std::vector<Natural> scan_class(const DeciderEq& d, const Natural& x, const Natural& bound) {
  std::vector<Natural> members;
  for (Natural y = 0; y < bound; ++y) {
    if (y != x && d(x, y)) members.push_back(y);
  }
  return members;
}

}  // namespace

JoinSearch bounded_join(const DeciderEq& first, const DeciderEq& second, const Natural& m, const Natural& n,
                        const Natural& universe_bound, std::size_t chain_bound) {
  if (m >= universe_bound || n >= universe_bound) {
    throw Error(ErrorKind::kInvalidArgument, "bounded_join: endpoints must lie below the universe bound");
  }
  if (m == n) return RelatedWitness{{m}, {}};

  bool exhaustive = true;
  const bool scannable = universe_bound <= kJoinScanLimit;
  auto expand = [&](const DeciderEq& d, const Natural& x) -> std::vector<Natural> {
    if (const auto* enumerate = d.enumerator()) {
      ClassMembers found = (*enumerate)(x, universe_bound);
      if (found.complete) return std::move(found.members);
      if (scannable) return scan_class(d, x, universe_bound);
      exhaustive = false;
      return std::move(found.members);
    }
    if (scannable) return scan_class(d, x, universe_bound);
    exhaustive = false;
    return {};
  };

  struct Parent {
    Natural previous;
    JoinSide side;
  };
  std::map<Natural, Parent> parent;
  std::set<Natural> seen{m};
  std::deque<std::pair<Natural, std::size_t>> queue{{m, 0}};
  while (!queue.empty()) {
    auto [x, depth] = std::move(queue.front());
    queue.pop_front();
    if (depth >= chain_bound) continue;
    for (const JoinSide side : {JoinSide::kFirst, JoinSide::kSecond}) {
      for (Natural& y : expand(side == JoinSide::kFirst ? first : second, x)) {
        if (y >= universe_bound || !seen.insert(y).second) continue;
        parent.emplace(y, Parent{x, side});
        if (y == n) {
          RelatedWitness witness;
          for (Natural at = n; at != m; at = parent.at(at).previous) {
            witness.chain.push_back(at);
            witness.via.push_back(parent.at(at).side);
          }
          witness.chain.push_back(m);
          std::reverse(witness.chain.begin(), witness.chain.end());
          std::reverse(witness.via.begin(), witness.via.end());
          // Same-side neighbours collapse by transitivity.
          for (std::size_t i = 0; i + 1 < witness.via.size();) {
            if (witness.via[i] == witness.via[i + 1]) {
              witness.chain.erase(witness.chain.begin() + static_cast<std::ptrdiff_t>(i + 1));
              witness.via.erase(witness.via.begin() + static_cast<std::ptrdiff_t>(i + 1));
            } else {
              ++i;
            }
          }
          return witness;
        }
        queue.emplace_back(std::move(y), depth + 1);
      }
    }
  }
  return NotWithinBounds{seen.size(), exhaustive};
}

bool verify_chain(const DeciderEq& first, const DeciderEq& second, const RelatedWitness& witness) {
  if (witness.chain.empty() || witness.via.size() + 1 != witness.chain.size()) return false;
  for (std::size_t i = 0; i < witness.via.size(); ++i) {
    const DeciderEq& d = witness.via[i] == JoinSide::kFirst ? first : second;
    if (!d(witness.chain[i], witness.chain[i + 1])) return false;
    if (i > 0 && witness.via[i] == witness.via[i - 1]) return false;
  }
  return true;
}

}  // namespace equlat
