#include "rszeta/patterns.hpp"

#include "rszeta/errors.hpp"

namespace rszeta {

void CoordSet::insert(const Coord& c, bool in_character) {
  const auto [row, col] = c;
  if (row < 1 || col < 1 || row > ambient_ || col > ambient_ || row == col) {
    throw UsageError("CoordSet: invalid coordinate (" + std::to_string(row) + "," +
                     std::to_string(col) + ")");
  }
  coords_.insert(c);
  if (in_character) {
    charsupp_.insert(c);
  }
}

bool CoordSet::is_upper_triangular() const {
  for (const auto& [row, col] : coords_) {
    if (row >= col) {
      return false;
    }
  }
  return true;
}

CoordSet CoordSet::conjugated(const PermMat& w) const {
  if (w.size() != ambient_) {
    throw UsageError("CoordSet::conjugated: size mismatch");
  }
  CoordSet out(ambient_);
  for (const auto& c : coords_) {
    const Coord image{w.image(c.first - 1) + 1, w.image(c.second - 1) + 1};
    out.insert(image, charsupp_.count(c) != 0);
  }
  return out;
}

CoordSet CoordSet::minus(const CoordSet& other) const {
  CoordSet out(ambient_);
  for (const auto& c : coords_) {
    if (!other.contains(c)) {
      out.insert(c, charsupp_.count(c) != 0);
    }
  }
  return out;
}

BlockPosition block_position(const Coord& c, int block_size) {
  return BlockPosition{(c.first - 1) / block_size + 1, (c.second - 1) / block_size + 1,
                       (c.first - 1) % block_size + 1, (c.second - 1) % block_size + 1};
}

UnipotentPatterns build_patterns(int n, int m, int r) {
  if (n < 1 || m < 1 || r < 1) {
    throw UsageError("build_patterns: n, m, r must be positive");
  }
  const int nm = n * m;
  const int size = nm * r;
  UnipotentPatterns p;
  p.n = n;
  p.m = m;
  p.r = r;
  p.full = CoordSet(size);
  p.lower_blocks = CoordSet(size);
  p.trimmed = CoordSet(size);
  p.diag = CoordSet(size);

  auto index = [r](int block, int l) { return (block - 1) * r + l; };
  for (int bi = 1; bi <= nm; ++bi) {
    for (int bj = bi + 1; bj <= nm; ++bj) {
      for (int l1 = 1; l1 <= r; ++l1) {
        for (int l2 = 1; l2 <= r; ++l2) {
          const Coord c{index(bi, l1), index(bj, l2)};
          const bool in_char = bj == bi + 1 && l1 == l2;
          p.full.insert(c, in_char);
          if (l1 < l2) {
            continue;
          }
          p.lower_blocks.insert(c, in_char);
          if (bi == 1 && bj == 2 && l1 != l2) {
            continue;
          }
          p.trimmed.insert(c, in_char);
        }
      }
    }
  }

  for (int b = 0; b < r; ++b) {
    for (int i = 1; i <= nm; ++i) {
      for (int j = i + 1; j <= nm; ++j) {
        p.diag.insert({b * nm + i, b * nm + j}, j == i + 1);
      }
    }
  }

  p.conj_trimmed = p.trimmed.conjugated(build_w0(n, m, r));
  p.rest = p.conj_trimmed.minus(p.diag);
  for (const auto& c : p.rest.coords()) {
    const BlockPosition pos = block_position(c, nm);
    if (pos.block_row == pos.block_col) {
      throw StructureError("build_patterns: conjugated coordinate (" + std::to_string(c.first) +
                           "," + std::to_string(c.second) +
                           ") lies in a diagonal block but is not a U^2 position");
    }
  }
  return p;
}

bool rest_matches_block_constraints(const UnipotentPatterns& p) {
  const int nm = p.n * p.m;
  CoordSet expected(p.rest.ambient());
  for (int bi = 1; bi <= p.r; ++bi) {
    for (int bj = 1; bj < bi; ++bj) {
      for (int i = 1; i <= nm; ++i) {
        for (int j = i + 1; j <= nm; ++j) {
          if (i == 1 && j == 2) {
            continue;
          }
          expected.insert({(bi - 1) * nm + i, (bj - 1) * nm + j});
        }
      }
    }
  }
  return expected.coords() == p.rest.coords();
}

} // namespace rszeta
