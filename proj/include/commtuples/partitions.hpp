#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace commtuples {

/// Parts in non-increasing order.
using Partition = std::vector<unsigned>;

/// Visits every partition of n exactly once (n = 0 visits the empty partition).
void for_each_partition(unsigned n, const std::function<void(const Partition&)>& visit);

/// multiplicity[m] = number of parts equal to m, for m in 0..n.
std::vector<unsigned> part_multiplicities(const Partition& parts, unsigned n);

}  // namespace commtuples
