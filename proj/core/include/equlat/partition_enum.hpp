#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "equlat/partition.hpp"

namespace equlat {

// Visits every partition of {0..n-1} exactly once (Bell(n) of them), in
// restricted-growth-string order.
void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> all_partitions(std::size_t n);

// Draws a class count uniformly from [1, n], then labels uniformly.
Partition random_partition(std::size_t n, std::mt19937_64& rng);

}  // namespace equlat
