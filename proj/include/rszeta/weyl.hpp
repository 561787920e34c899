#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rszeta {

// Torus element diag(p^{k_1}, ..., p^{k_N}) recorded by its valuation vector.
struct Cochar {
  std::vector<int> vals;

  Cochar() = default;
  explicit Cochar(std::vector<int> v) : vals(std::move(v)) {}
  static Cochar zero(int size) { return Cochar(std::vector<int>(static_cast<std::size_t>(size), 0)); }
  static Cochar basis(int size, int index);

  int size() const { return static_cast<int>(vals.size()); }
  int operator[](int i) const { return vals.at(static_cast<std::size_t>(i)); }
  int total() const;
  bool is_dominant() const;

  Cochar operator+(const Cochar& other) const;
  Cochar scaled(int factor) const;

  bool operator==(const Cochar&) const = default;
  std::string to_string() const;
};

// diag(t, I_{ambient - t.size()}): t placed in the leading coordinates.
Cochar embed_leading(const Cochar& t, int ambient);

// Permutation matrix on N coordinates. Column j (0-based) has its single one in
// row image(j), so conjugation sends the diagonal entry at j to image(j) and the
// matrix coordinate (i, j) to (image(i), image(j)).
class PermMat {
public:
  static PermMat identity(int size);
  // Builds from 1-based (row, col) positions of the ones; throws StructureError
  // unless they form a permutation matrix of the given size.
  static PermMat from_entries(int size, const std::vector<std::pair<int, int>>& entries);

  int size() const { return static_cast<int>(image_.size()); }
  int image(int col) const { return image_.at(static_cast<std::size_t>(col)); }
  // 1-based (row, col) positions, ordered by column.
  std::vector<std::pair<int, int>> entries() const;

  PermMat inverse() const;
  // (*this) * other as matrices.
  PermMat operator*(const PermMat& other) const;
  bool operator==(const PermMat&) const = default;

  // Cycle notation on 1-based labels, fixed points omitted; "()" for identity.
  std::string cycles() const;

private:
  explicit PermMat(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

// w * diag(p^c) * w^{-1}.
Cochar conj_cochar(const PermMat& w, const Cochar& c);

// diag(J_{nm}, ..., J_{nm}) with r blocks, J the antidiagonal permutation.
PermMat build_wJ(int n, int m, int r);

// The Weyl element of GL_{nrm} with a one at (a + b*nm, (a-1)*r + b + 1) for
// 1 <= a <= nm, 0 <= b <= r-1. Conjugating by it regroups r interleaved copies
// of GL_{nm} into diagonal blocks.
PermMat build_w0(int n, int m, int r);

} // namespace rszeta
