#include "commtuples/partitions.hpp"

namespace commtuples {

namespace {

void extend(unsigned remaining, unsigned max_part, Partition& parts,
            const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (unsigned part = remaining < max_part ? remaining : max_part; part >= 1; --part) {
    parts.push_back(part);
    extend(remaining - part, part, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_partition(unsigned n, const std::function<void(const Partition&)>& visit) {
  Partition parts;
  parts.reserve(n);
  extend(n, n, parts, visit);
}

std::vector<unsigned> part_multiplicities(const Partition& parts, unsigned n) {
  std::vector<unsigned> counts(n + 1, 0);
  for (auto p : parts) ++counts.at(p);
  return counts;
}

}  // namespace commtuples
