#pragma once

#include <optional>
#include <vector>

#include "netmate/instance.hpp"

namespace netmate {

struct PartitionAnswer {
  bool exists = false;
  std::optional<std::vector<int>> witness;  // 0-based indices of one half
};

// Equal-cardinality, equal-sum split by exhaustive subset enumeration. The
// witness is the lexicographically least qualifying index set.
PartitionAnswer balanced_partition(const PartitionInstance& instance);

// Same decision via a reachability table over (count, sum).
bool balanced_partition_by_table(const PartitionInstance& instance);

}  // namespace netmate
