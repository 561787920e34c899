#pragma once

#include <set>
#include <string>
#include <utility>

#include "rszeta/weyl.hpp"

namespace rszeta {

// 1-based (row, col) matrix position.
using Coord = std::pair<int, int>;

// A coordinate unipotent pattern: the off-diagonal positions that are free in
// some unipotent subgroup of GL_N, plus the subset on which the additive
// character is evaluated. Only positions matter at the unramified level.
class CoordSet {
public:
  explicit CoordSet(int ambient = 0) : ambient_(ambient) {}

  int ambient() const { return ambient_; }
  const std::set<Coord>& coords() const { return coords_; }
  const std::set<Coord>& charsupp() const { return charsupp_; }
  std::size_t size() const { return coords_.size(); }
  bool contains(const Coord& c) const { return coords_.count(c) != 0; }

  void insert(const Coord& c, bool in_character = false);

  bool is_upper_triangular() const;

  // w U w^{-1}, character support transported along.
  CoordSet conjugated(const PermMat& w) const;

  // Coordinates of *this not in other; character support restricted accordingly.
  CoordSet minus(const CoordSet& other) const;

  bool operator==(const CoordSet&) const = default;

private:
  int ambient_;
  std::set<Coord> coords_;
  std::set<Coord> charsupp_;
};

// The unipotent patterns of GL_{nrm} used to unfold the generating integral.
//   full       U: block upper unipotent radical, nm x nm array of r x r blocks,
//                 character on the diagonals of the superdiagonal blocks.
//   lower_blocks  U^0: every block restricted to lower-triangular-or-diagonal entries.
//   trimmed    U^1: U^0 with the (1,2) block forced diagonal.
//   conj_trimmed  w0 U^1 w0^{-1}.
//   diag       U^2: strictly upper entries of the r diagonal nm x nm blocks,
//                 character on their superdiagonals.
//   rest       U^3: conj_trimmed minus diag.
struct UnipotentPatterns {
  int n = 0;
  int m = 0;
  int r = 0;
  CoordSet full;
  CoordSet lower_blocks;
  CoordSet trimmed;
  CoordSet conj_trimmed;
  CoordSet diag;
  CoordSet rest;
};

// Throws StructureError if w0 U^1 w0^{-1} has a coordinate inside a diagonal
// nm-block that is not a U^2 position.
UnipotentPatterns build_patterns(int n, int m, int r);

// Position of a coordinate in the r x r array of nm x nm blocks: block row,
// block col (1-based) and in-block row, col (1-based).
struct BlockPosition {
  int block_row;
  int block_col;
  int row;
  int col;
};
BlockPosition block_position(const Coord& c, int block_size);

// U^3 should be exactly: nm-blocks strictly below the block diagonal, each
// holding its strictly upper in-block entries except in-block (1,2).
bool rest_matches_block_constraints(const UnipotentPatterns& p);

} // namespace rszeta
