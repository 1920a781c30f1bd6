#include "netmate/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace netmate {

namespace {

// Walks size-k index subsets in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

}  // namespace

PartitionAnswer balanced_partition(const PartitionInstance& instance) {
  const auto& a = instance.values();
  const int n = instance.size();
  const std::int64_t total = instance.twice_target();
  if (n % 2 != 0 || total % 2 != 0) return {};
  if (n > 30) throw std::invalid_argument("enumeration limited to 30 values");
  std::vector<int> idx(static_cast<std::size_t>(n / 2));
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::int64_t sum = 0;
    for (int i : idx) sum += a[static_cast<std::size_t>(i)];
    if (2 * sum == total) return {true, idx};
  } while (next_combination(idx, n));
  return {};
}

bool balanced_partition_by_table(const PartitionInstance& instance) {
  const auto& a = instance.values();
  const int n = instance.size();
  const std::int64_t total = instance.twice_target();
  if (n % 2 != 0 || total % 2 != 0) return false;
  const auto half = static_cast<std::size_t>(total / 2);
  const auto k = static_cast<std::size_t>(n / 2);
  if (half > 10'000'000 / (k + 1)) throw std::invalid_argument("table too large");
  // reach[c] bit s: some c values sum to s
  const std::size_t words = half / 64 + 1;
  std::vector<std::vector<std::uint64_t>> reach(k + 1, std::vector<std::uint64_t>(words, 0));
  reach[0][0] = 1;
  for (auto v : a) {
    const auto w = static_cast<std::size_t>(v);
    if (w > half) continue;
    const std::size_t jump = w / 64, bits = w % 64;
    for (std::size_t c = k; c >= 1; --c) {
      const auto& from = reach[c - 1];
      auto& to = reach[c];
      // to |= from << w
      for (std::size_t i = words; i-- > jump;) {
        std::uint64_t x = from[i - jump] << bits;
        if (bits != 0 && i > jump) x |= from[i - jump - 1] >> (64 - bits);
        to[i] |= x;
      }
    }
  }
  return (reach[k][half / 64] >> (half % 64)) & 1u;
}

}  // namespace netmate
