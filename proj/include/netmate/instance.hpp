#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace netmate {

class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A multiset A of positive integers. The target sum t may be half-integral,
// so the exact integer 2t (the total) is stored instead.
class PartitionInstance {
 public:
  explicit PartitionInstance(std::vector<std::int64_t> values);

  const std::vector<std::int64_t>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  std::int64_t twice_target() const { return sum_; }

  bool operator==(const PartitionInstance&) const = default;

 private:
  std::vector<std::int64_t> values_;
  std::int64_t sum_ = 0;
};

// Whitespace separated decimal integers; '#' starts a comment.
PartitionInstance parse_instance(const std::string& text);

}  // namespace netmate
