#include "equlat/small_eq.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "equlat/error.hpp"

namespace equlat {

SmallEq SmallEq::from_raw(std::size_t threshold, std::span<const std::uint64_t> raw_head,
                          std::uint64_t raw_tail) {
  if (raw_head.size() != threshold) {
    throw Error(ErrorKind::kInvalidArgument, "head labelling does not match threshold");
  }
  std::unordered_map<std::uint64_t, Element> first_seen;
  first_seen.emplace(raw_tail, threshold);
  std::vector<Element> head(threshold);
  Element tail = threshold;
  for (std::size_t x = 0; x < threshold; ++x) {
    if (raw_head[x] == raw_tail && tail == threshold) {
      tail = x;
      first_seen[raw_tail] = x;
    }
    head[x] = first_seen.try_emplace(raw_head[x], x).first->second;
  }
  return SmallEq(std::move(head), tail);
}

SmallEq SmallEq::from_classes(std::size_t threshold, const std::vector<std::vector<Element>>& classes,
                              Element tail_label) {
  constexpr std::uint64_t kUnassigned = static_cast<std::uint64_t>(-1);
  std::vector<std::uint64_t> raw(threshold, kUnassigned);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw Error(ErrorKind::kInvalidPartition, "empty class");
    for (Element x : classes[c]) {
      if (x >= threshold) {
        throw Error(ErrorKind::kInvalidPartition,
                    "head element " + std::to_string(x) + " not below threshold " + std::to_string(threshold));
      }
      if (raw[x] != kUnassigned) {
        throw Error(ErrorKind::kInvalidPartition, "element " + std::to_string(x) + " appears twice");
      }
      raw[x] = c;
    }
  }
  for (std::size_t x = 0; x < threshold; ++x) {
    if (raw[x] == kUnassigned) {
      throw Error(ErrorKind::kInvalidPartition, "element " + std::to_string(x) + " is not covered");
    }
  }
  std::uint64_t raw_tail = classes.size();
  if (tail_label < threshold) {
    raw_tail = raw[tail_label];
  } else if (tail_label != threshold) {
    throw Error(ErrorKind::kInvalidPartition, "tail label must be a head element or the threshold");
  }
  return from_raw(threshold, raw, raw_tail);
}

SmallEq SmallEq::singular_upper(std::size_t threshold, std::span<const Element> members) {
  std::vector<std::uint64_t> raw(threshold);
  for (std::size_t x = 0; x < threshold; ++x) raw[x] = x + 1;
  for (Element x : members) {
    if (x >= threshold) throw Error(ErrorKind::kInvalidArgument, "member not below threshold");
    raw[x] = 0;
  }
  return from_raw(threshold, raw, 0);
}

Element SmallEq::class_of(std::uint64_t x) const {
  return x < head_.size() ? head_[static_cast<std::size_t>(x)] : tail_;
}

std::size_t SmallEq::class_count() const {
  std::size_t count = tail_ == head_.size() ? 1 : 0;
  for (std::size_t x = 0; x < head_.size(); ++x) count += head_[x] == x;
  return count;
}

std::vector<std::vector<Element>> SmallEq::head_classes() const {
  std::map<Element, std::vector<Element>> grouped;
  for (std::size_t x = 0; x < head_.size(); ++x) grouped[head_[x]].push_back(x);
  std::vector<std::vector<Element>> out;
  out.reserve(grouped.size());
  for (auto& [label, members] : grouped) out.push_back(std::move(members));
  return out;
}

std::vector<Element> SmallEq::tail_head_members() const {
  std::vector<Element> members;
  for (std::size_t x = 0; x < head_.size(); ++x) {
    if (head_[x] == tail_) members.push_back(x);
  }
  return members;
}

SmallEq SmallEq::canonical() const {
  std::size_t n = head_.size();
  while (n > 0 && head_[n - 1] == tail_) --n;
  std::vector<Element> head(head_.begin(), head_.begin() + static_cast<std::ptrdiff_t>(n));
  return SmallEq(std::move(head), std::min<Element>(tail_, n));
}

bool operator==(const SmallEq& a, const SmallEq& b) {
  const SmallEq ca = a.canonical();
  const SmallEq cb = b.canonical();
  return ca.head_ == cb.head_ && ca.tail_ == cb.tail_;
}

SmallEq smalleq_meet(const SmallEq& a, const SmallEq& b) {
  const std::size_t threshold = std::max(a.threshold(), b.threshold());
  std::map<std::pair<Element, Element>, std::uint64_t> ids;
  auto id_of = [&](Element la, Element lb) {
    return ids.try_emplace({la, lb}, ids.size()).first->second;
  };
  std::vector<std::uint64_t> raw(threshold);
  for (std::size_t x = 0; x < threshold; ++x) raw[x] = id_of(a.class_of(x), b.class_of(x));
  const std::uint64_t raw_tail = id_of(a.tail_label(), b.tail_label());
  return SmallEq::from_raw(threshold, raw, raw_tail);
}

Partition smalleq_restrict(const SmallEq& a, std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = a.class_of(x);
  return Partition::from_labels(labels);
}

}  // namespace equlat
