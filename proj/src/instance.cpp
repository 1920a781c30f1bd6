#include "netmate/instance.hpp"

#include <charconv>
#include <sstream>

namespace netmate {

PartitionInstance::PartitionInstance(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw InstanceError("an instance needs at least two values");
  for (auto v : values_) {
    if (v < 1) throw InstanceError("instance values must be positive, got " + std::to_string(v));
    sum_ += v;
  }
}

PartitionInstance parse_instance(const std::string& text) {
  std::vector<std::int64_t> values;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
      if (ec != std::errc{} || ptr != word.data() + word.size())
        throw InstanceError("line " + std::to_string(line_no) + ": not an integer: '" + word + "'");
      values.push_back(v);
    }
  }
  return PartitionInstance(std::move(values));
}

}  // namespace netmate
