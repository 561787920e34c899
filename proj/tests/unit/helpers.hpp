#pragma once

#include <vector>

#include "rszeta/mpoly.hpp"

namespace testutil {

using rszeta::MPoly;
using rszeta::VarCtxPtr;

// Slots of VarCtx::rankin_selberg(r, m): x1..xr, y1..ym, v.
struct RS {
  int r;
  int m;
  VarCtxPtr ctx;
  explicit RS(int r_, int m_) : r(r_), m(m_), ctx(rszeta::VarCtx::rankin_selberg(r_, m_)) {}
  MPoly x(int i, int p = 1) const { return MPoly::variable(ctx, static_cast<std::size_t>(i - 1), p); }
  MPoly y(int j, int p = 1) const { return MPoly::variable(ctx, static_cast<std::size_t>(r + j - 1), p); }
  MPoly v(int p = 1) const { return MPoly::variable(ctx, static_cast<std::size_t>(r + m), p); }
  MPoly c(long num, long den = 1) const { return MPoly::constant(ctx, rszeta::make_rat(num, den)); }
  std::vector<MPoly> xs() const {
    std::vector<MPoly> out;
    for (int i = 1; i <= r; ++i) out.push_back(x(i));
    return out;
  }
  std::vector<MPoly> ys(int power = 1) const {
    std::vector<MPoly> out;
    for (int j = 1; j <= m; ++j) out.push_back(y(j, power));
    return out;
  }
};

} // namespace testutil
