#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace equlat {

using Element = std::size_t;

// An equivalence relation on the finite universe {0, ..., n-1}.
//
// Labels are canonical: every element is labelled by the least element of
// its class, so two partitions are equal iff their label vectors are equal.
class Partition {
 public:
  static Partition bottom(std::size_t n);
  static Partition top(std::size_t n);

  // Classes must be non-empty, pairwise disjoint and cover {0..n-1} where n
  // is one more than the largest listed element.
  static Partition from_classes(const std::vector<std::vector<Element>>& classes);

  // Accepts any labelling (equal labels = same class) and canonicalizes it.
  static Partition from_labels(std::span<const std::size_t> labels);

  // The singular partition whose only non-singleton class is `members`.
  // With fewer than two members the result is bottom(n).
  static Partition singular(std::size_t n, std::span<const Element> members);

  std::size_t universe_size() const noexcept { return class_of_.size(); }
  Element class_of(Element x) const;
  std::span<const Element> labels() const noexcept { return class_of_; }

  bool related(Element x, Element y) const;
  std::size_t class_count() const;

  // Classes sorted by least element, members ascending.
  std::vector<std::vector<Element>> classes() const;

  // Restriction to {0..n-1}, n <= universe_size().
  Partition prefix(std::size_t n) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<Element> class_of) : class_of_(std::move(class_of)) {}

  std::vector<Element> class_of_;
};

// The equivalence whose only non-singleton class is {low, high}.
struct Atom {
  Element low = 0;
  Element high = 0;
  std::size_t universe = 0;

  static Atom make(Element a, Element b, std::size_t universe);
  Partition to_partition() const;

  friend bool operator==(const Atom&, const Atom&) = default;
};

bool related(const Partition& e, Element x, Element y);
bool leq(const Partition& e, const Partition& f);
Partition meet(const Partition& e, const Partition& f);
Partition join(const Partition& e, const Partition& f);

std::size_t class_count(const Partition& e);
bool is_singular(const Partition& e);
// Throws kNotSingular unless exactly one class has two or more elements.
std::vector<Element> non_singleton_class(const Partition& e);

bool is_complement(const Partition& e, const Partition& f);

// For singular `e` with non-singleton class S: true iff every class of `f`
// holds exactly one element of S.
bool singular_complement_valid(const Partition& e, const Partition& f);

// Singular partition whose big class is {least element of each class of e}.
// Always a complement of `e`; bottom(n) maps to top(n) and top(n) to bottom(n).
Partition least_element_complement(const Partition& e);

// Star decomposition: for each class with least element m, atoms (m, x).
std::vector<Atom> atomistic_decomposition(const Partition& e);

// Join of the given atoms over {0..n-1}; bottom(n) for an empty list.
Partition join_atoms(std::span<const Atom> atoms, std::size_t n);

}  // namespace equlat
