#include "rszeta/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rszeta/errors.hpp"

namespace rszeta {

Cochar Cochar::basis(int size, int index) {
  Cochar c = zero(size);
  c.vals.at(static_cast<std::size_t>(index)) = 1;
  return c;
}

int Cochar::total() const { return std::accumulate(vals.begin(), vals.end(), 0); }

bool Cochar::is_dominant() const {
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
    if (vals[i] < vals[i + 1]) {
      return false;
    }
  }
  return true;
}

Cochar Cochar::operator+(const Cochar& other) const {
  if (other.size() != size()) {
    throw UsageError("Cochar: size mismatch");
  }
  Cochar out = *this;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    out.vals[i] += other.vals[i];
  }
  return out;
}

Cochar Cochar::scaled(int factor) const {
  Cochar out = *this;
  for (int& v : out.vals) {
    v *= factor;
  }
  return out;
}

std::string Cochar::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < vals.size(); ++i) {
    os << (i ? "," : "") << vals[i];
  }
  os << ')';
  return os.str();
}

Cochar embed_leading(const Cochar& t, int ambient) {
  if (t.size() > ambient) {
    throw UsageError("embed_leading: torus element larger than ambient group");
  }
  Cochar out = Cochar::zero(ambient);
  std::copy(t.vals.begin(), t.vals.end(), out.vals.begin());
  return out;
}

PermMat PermMat::identity(int size) {
  std::vector<int> image(static_cast<std::size_t>(size));
  std::iota(image.begin(), image.end(), 0);
  return PermMat(std::move(image));
}

PermMat PermMat::from_entries(int size, const std::vector<std::pair<int, int>>& entries) {
  if (static_cast<int>(entries.size()) != size) {
    throw StructureError("PermMat: expected " + std::to_string(size) + " entries, got " +
                         std::to_string(entries.size()));
  }
  std::vector<int> image(static_cast<std::size_t>(size), -1);
  std::vector<bool> row_used(static_cast<std::size_t>(size), false);
  for (const auto& [row, col] : entries) {
    if (row < 1 || row > size || col < 1 || col > size) {
      throw StructureError("PermMat: entry (" + std::to_string(row) + "," + std::to_string(col) +
                           ") out of range");
    }
    auto& slot = image[static_cast<std::size_t>(col - 1)];
    if (slot != -1 || row_used[static_cast<std::size_t>(row - 1)]) {
      throw StructureError("PermMat: entries do not define a bijection at (" +
                           std::to_string(row) + "," + std::to_string(col) + ")");
    }
    slot = row - 1;
    row_used[static_cast<std::size_t>(row - 1)] = true;
  }
  return PermMat(std::move(image));
}

std::vector<std::pair<int, int>> PermMat::entries() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t col = 0; col < image_.size(); ++col) {
    out.emplace_back(image_[col] + 1, static_cast<int>(col) + 1);
  }
  return out;
}

PermMat PermMat::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t col = 0; col < image_.size(); ++col) {
    inv[static_cast<std::size_t>(image_[col])] = static_cast<int>(col);
  }
  return PermMat(std::move(inv));
}

PermMat PermMat::operator*(const PermMat& other) const {
  if (other.size() != size()) {
    throw UsageError("PermMat: size mismatch in product");
  }
  std::vector<int> out(image_.size());
  for (std::size_t col = 0; col < image_.size(); ++col) {
    out[col] = image_[static_cast<std::size_t>(other.image_[col])];
  }
  return PermMat(std::move(out));
}

std::string PermMat::cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(image_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == static_cast<int>(start)) {
      continue;
    }
    any = true;
    os << '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      os << (first ? "" : " ") << i + 1;
      first = false;
      i = static_cast<std::size_t>(image_[i]);
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Cochar conj_cochar(const PermMat& w, const Cochar& c) {
  if (w.size() != c.size()) {
    throw UsageError("conj_cochar: size mismatch");
  }
  Cochar out = Cochar::zero(c.size());
  for (int i = 0; i < c.size(); ++i) {
    out.vals[static_cast<std::size_t>(w.image(i))] = c[i];
  }
  return out;
}

namespace {
void check_sizes(int n, int m, int r, const char* who) {
  if (n < 1 || m < 1 || r < 1) {
    throw UsageError(std::string(who) + ": n, m, r must be positive");
  }
}
} // namespace

PermMat build_wJ(int n, int m, int r) {
  check_sizes(n, m, r, "build_wJ");
  const int block = n * m;
  std::vector<std::pair<int, int>> entries;
  for (int b = 0; b < r; ++b) {
    for (int a = 1; a <= block; ++a) {
      entries.emplace_back(b * block + (block + 1 - a), b * block + a);
    }
  }
  return PermMat::from_entries(block * r, entries);
}

PermMat build_w0(int n, int m, int r) {
  check_sizes(n, m, r, "build_w0");
  const int block = n * m;
  std::vector<std::pair<int, int>> entries;
  for (int b = 0; b <= r - 1; ++b) {
    for (int a = 1; a <= block; ++a) {
      entries.emplace_back(a + b * block, (a - 1) * r + b + 1);
    }
  }
  return PermMat::from_entries(block * r, entries);
}

} // namespace rszeta
