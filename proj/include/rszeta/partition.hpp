#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace rszeta {

// Integer partition. Trailing zero parts are dropped on construction, so two
// partitions compare equal iff they have the same nonzero parts.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  // Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  // parts()[i] for i < length(), else 0.
  int operator[](int i) const;

  // Conjugate (transposed Young diagram).
  Partition conjugate() const;

  bool operator==(const Partition&) const = default;
  std::string to_string() const;

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of `weight` with at most `max_parts` parts, in reverse
// lexicographic order ((w), (w-1,1), ...).
std::vector<Partition> partitions_of(int weight, int max_parts);

// All partitions of weight 0..max_weight with at most `max_parts` parts.
std::vector<Partition> partitions_up_to(int max_weight, int max_parts);

} // namespace rszeta
