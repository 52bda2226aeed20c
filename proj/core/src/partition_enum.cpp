#include "equlat/partition_enum.hpp"

#include <algorithm>

#include "equlat/error.hpp"

namespace equlat {

void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit) {
  if (n == 0) throw Error(ErrorKind::kInvalidUniverse, "universe must contain at least one element");
  // rgs[i] <= 1 + max(rgs[0..i-1]), rgs[0] = 0.
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    visit(Partition::from_labels(rgs));
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Partition random_partition(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw Error(ErrorKind::kInvalidUniverse, "universe must contain at least one element");
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  std::vector<std::size_t> labels(n);
  for (auto& label : labels) label = pick(rng);
  return Partition::from_labels(labels);
}

}  // namespace equlat
