#include "rszeta/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "rszeta/errors.hpp"

namespace rszeta {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw UsageError("Partition: negative part");
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw UsageError("Partition: parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) {
    parts_.pop_back();
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::operator[](int i) const {
  return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  const int first = (*this)[0];
  for (int col = 0; col < first; ++col) {
    int height = 0;
    while (height < length() && parts_[static_cast<std::size_t>(height)] > col) {
      ++height;
    }
    out.push_back(height);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    os << (i ? "," : "") << parts_[i];
  }
  os << ')';
  return os.str();
}

std::vector<Partition> partitions_of(int weight, int max_parts) {
  if (weight < 0 || max_parts < 0) {
    throw UsageError("partitions_of: negative argument");
  }
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_parts) {
      return;
    }
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(weight, weight);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_parts) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto level = partitions_of(w, max_parts);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

} // namespace rszeta
