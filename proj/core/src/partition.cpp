#include "equlat/partition.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "equlat/disjoint_set.hpp"
#include "equlat/error.hpp"

namespace equlat {
namespace {

void require_universe(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidUniverse, "universe must contain at least one element");
}

void require_same_universe(const Partition& e, const Partition& f) {
  if (e.universe_size() != f.universe_size()) {
    throw Error(ErrorKind::kUniverseMismatch,
                "universes of size " + std::to_string(e.universe_size()) + " and " +
                    std::to_string(f.universe_size()));
  }
}

}  // namespace

Partition Partition::bottom(std::size_t n) {
  require_universe(n);
  std::vector<Element> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = x;
  return Partition(std::move(labels));
}

Partition Partition::top(std::size_t n) {
  require_universe(n);
  return Partition(std::vector<Element>(n, 0));
}

Partition Partition::from_classes(const std::vector<std::vector<Element>>& classes) {
  std::size_t n = 0;
  for (const auto& cls : classes) {
    if (cls.empty()) throw Error(ErrorKind::kInvalidPartition, "empty class");
    for (Element x : cls) n = std::max(n, x + 1);
  }
  if (n == 0) throw Error(ErrorKind::kInvalidPartition, "no classes given");

  constexpr Element kUnassigned = static_cast<Element>(-1);
  std::vector<Element> labels(n, kUnassigned);
  for (const auto& cls : classes) {
    const Element least = *std::min_element(cls.begin(), cls.end());
    for (Element x : cls) {
      if (labels[x] != kUnassigned) {
        throw Error(ErrorKind::kInvalidPartition, "element " + std::to_string(x) + " appears twice");
      }
      labels[x] = least;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (labels[x] == kUnassigned) {
      throw Error(ErrorKind::kInvalidPartition, "element " + std::to_string(x) + " is not covered");
    }
  }
  return Partition(std::move(labels));
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  require_universe(labels.size());
  std::unordered_map<std::size_t, Element> first_seen;
  first_seen.reserve(labels.size());
  std::vector<Element> canonical(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    canonical[x] = first_seen.try_emplace(labels[x], x).first->second;
  }
  return Partition(std::move(canonical));
}

Partition Partition::singular(std::size_t n, std::span<const Element> members) {
  require_universe(n);
  std::vector<Element> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = x;
  if (members.empty()) return Partition(std::move(labels));
  const Element least = *std::min_element(members.begin(), members.end());
  for (Element x : members) {
    if (x >= n) {
      throw Error(ErrorKind::kInvalidPartition,
                  "element " + std::to_string(x) + " outside universe of size " + std::to_string(n));
    }
    labels[x] = least;
  }
  return Partition(std::move(labels));
}

Element Partition::class_of(Element x) const {
  if (x >= class_of_.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "element " + std::to_string(x) + " outside universe of size " +
                    std::to_string(class_of_.size()));
  }
  return class_of_[x];
}

bool Partition::related(Element x, Element y) const { return class_of(x) == class_of(y); }

std::size_t Partition::class_count() const {
  std::size_t count = 0;
  for (std::size_t x = 0; x < class_of_.size(); ++x) count += class_of_[x] == x;
  return count;
}

std::vector<std::vector<Element>> Partition::classes() const {
  std::vector<std::vector<Element>> result;
  std::vector<std::size_t> slot(class_of_.size());
  for (std::size_t x = 0; x < class_of_.size(); ++x) {
    if (class_of_[x] == x) {
      slot[x] = result.size();
      result.emplace_back();
    }
    result[slot[class_of_[x]]].push_back(x);
  }
  return result;
}

Partition Partition::prefix(std::size_t n) const {
  require_universe(n);
  if (n > class_of_.size()) {
    throw Error(ErrorKind::kInvalidArgument, "prefix larger than the universe");
  }
  // Labels of a prefix may point past it only if they are not least
  // elements, which canonical labels never are.
  return Partition(std::vector<Element>(class_of_.begin(), class_of_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Atom Atom::make(Element a, Element b, std::size_t universe) {
  if (a == b) throw Error(ErrorKind::kInvalidArgument, "atom needs two distinct elements");
  if (std::max(a, b) >= universe) throw Error(ErrorKind::kInvalidArgument, "atom outside universe");
  return Atom{std::min(a, b), std::max(a, b), universe};
}

Partition Atom::to_partition() const {
  const Element members[] = {low, high};
  return Partition::singular(universe, members);
}

bool related(const Partition& e, Element x, Element y) { return e.related(x, y); }

bool leq(const Partition& e, const Partition& f) {
  require_same_universe(e, f);
  const auto el = e.labels();
  const auto fl = f.labels();
  for (std::size_t x = 0; x < el.size(); ++x) {
    if (fl[x] != fl[el[x]]) return false;
  }
  return true;
}

Partition meet(const Partition& e, const Partition& f) {
  require_same_universe(e, f);
  const std::size_t n = e.universe_size();
  std::vector<std::size_t> pair_labels(n);
  for (std::size_t x = 0; x < n; ++x) pair_labels[x] = e.labels()[x] * n + f.labels()[x];
  return Partition::from_labels(pair_labels);
}

Partition join(const Partition& e, const Partition& f) {
  require_same_universe(e, f);
  const std::size_t n = e.universe_size();
  DisjointSet sets(n);
  for (std::size_t x = 0; x < n; ++x) {
    sets.unite(x, e.labels()[x]);
    sets.unite(x, f.labels()[x]);
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = sets.find(x);
  return Partition::from_labels(labels);
}

std::size_t class_count(const Partition& e) { return e.class_count(); }

namespace {

// Sizes indexed by class label.
std::vector<std::size_t> class_sizes(const Partition& e) {
  std::vector<std::size_t> sizes(e.universe_size(), 0);
  for (Element label : e.labels()) ++sizes[label];
  return sizes;
}

}  // namespace

bool is_singular(const Partition& e) {
  const auto sizes = class_sizes(e);
  return std::count_if(sizes.begin(), sizes.end(), [](std::size_t s) { return s >= 2; }) == 1;
}

std::vector<Element> non_singleton_class(const Partition& e) {
  if (!is_singular(e)) throw Error(ErrorKind::kNotSingular, "partition is not singular");
  const auto sizes = class_sizes(e);
  std::vector<Element> members;
  for (std::size_t x = 0; x < e.universe_size(); ++x) {
    if (sizes[e.labels()[x]] >= 2) members.push_back(x);
  }
  return members;
}

bool is_complement(const Partition& e, const Partition& f) {
  const std::size_t n = e.universe_size();
  return meet(e, f) == Partition::bottom(n) && join(e, f) == Partition::top(n);
}

bool singular_complement_valid(const Partition& e, const Partition& f) {
  require_same_universe(e, f);
  const auto big = non_singleton_class(e);
  std::vector<std::size_t> hits(f.universe_size(), 0);
  for (Element x : big) ++hits[f.labels()[x]];
  for (std::size_t x = 0; x < f.universe_size(); ++x) {
    if (f.labels()[x] == x && hits[x] != 1) return false;
  }
  return true;
}

Partition least_element_complement(const Partition& e) {
  // 0 is always a least element, so it labels the big class.
  std::vector<std::size_t> labels(e.universe_size());
  for (std::size_t x = 0; x < labels.size(); ++x) labels[x] = e.labels()[x] == x ? 0 : x;
  return Partition::from_labels(labels);
}

std::vector<Atom> atomistic_decomposition(const Partition& e) {
  std::vector<Atom> atoms;
  for (std::size_t x = 0; x < e.universe_size(); ++x) {
    const Element least = e.labels()[x];
    if (least != x) atoms.push_back(Atom{least, x, e.universe_size()});
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    return a.low != b.low ? a.low < b.low : a.high < b.high;
  });
  return atoms;
}

Partition join_atoms(std::span<const Atom> atoms, std::size_t n) {
  Partition result = Partition::bottom(n);
  for (const Atom& atom : atoms) {
    if (atom.universe != n) {
      throw Error(ErrorKind::kUniverseMismatch, "atom universe differs from target universe");
    }
    result = join(result, atom.to_partition());
  }
  return result;
}

}  // namespace equlat
