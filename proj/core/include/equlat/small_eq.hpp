#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "equlat/partition.hpp"

namespace equlat {

// An equivalence on all of N with finitely many classes: an explicit head
// over {0..threshold-1} plus a tail class that contains every x >= threshold
// and possibly some head elements.
//
// Labels are canonical (least class member); the tail label is the least
// member of the tail class, which equals `threshold` when no head element
// belongs to it. Equality is semantic: thresholds may differ.
class SmallEq {
 public:
  // Elements x < threshold with raw_head[x] == raw_tail are in the tail class.
  static SmallEq from_raw(std::size_t threshold, std::span<const std::uint64_t> raw_head,
                          std::uint64_t raw_tail);

  // Classes must partition {0..threshold-1}; `tail_label` is either a member
  // of the class that merges with the tail or `threshold` itself.
  static SmallEq from_classes(std::size_t threshold, const std::vector<std::vector<Element>>& classes,
                              Element tail_label);

  // Singular equivalence with big class `members` ∪ ↑threshold.
  static SmallEq singular_upper(std::size_t threshold, std::span<const Element> members);

  static SmallEq top() { return SmallEq({}, 0); }

  std::size_t threshold() const noexcept { return head_.size(); }
  std::span<const Element> head_labels() const noexcept { return head_; }
  Element tail_label() const noexcept { return tail_; }

  Element class_of(std::uint64_t x) const;
  bool related(std::uint64_t x, std::uint64_t y) const { return class_of(x) == class_of(y); }
  std::size_t class_count() const;

  // Head classes (as in partition text output) ordered by least element.
  std::vector<std::vector<Element>> head_classes() const;

  // Members of the tail class below the threshold.
  std::vector<Element> tail_head_members() const;

  // Same relation with the least possible threshold.
  SmallEq canonical() const;

  friend bool operator==(const SmallEq& a, const SmallEq& b);

 private:
  SmallEq(std::vector<Element> head, Element tail) : head_(std::move(head)), tail_(tail) {}

  std::vector<Element> head_;
  Element tail_ = 0;
};

// Common refinement: threshold max(N_A, N_B), classes are the non-empty
// pairwise intersections, tail is the intersection of the tails.
SmallEq smalleq_meet(const SmallEq& a, const SmallEq& b);

// Materialize on {0..n-1}.
Partition smalleq_restrict(const SmallEq& a, std::size_t n);

}  // namespace equlat
