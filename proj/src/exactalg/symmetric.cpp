#include "rszeta/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rszeta/errors.hpp"

namespace rszeta {

std::vector<MPoly> variables(const VarCtxPtr& ctx, std::span<const std::size_t> slots) {
  std::vector<MPoly> out;
  out.reserve(slots.size());
  for (std::size_t slot : slots) {
    out.push_back(MPoly::variable(ctx, slot));
  }
  return out;
}

std::vector<MPoly> hpoly_table(const VarCtxPtr& ctx, int kmax, std::span<const MPoly> args) {
  if (kmax < 0) {
    return {};
  }
  const auto width = static_cast<std::size_t>(kmax) + 1;
  // h over the first i arguments: h_i[j] = h_{i-1}[j] + a_i * h_i[j-1].
  std::vector<MPoly> h(width, MPoly(ctx));
  h[0] = MPoly::constant(ctx, 1);
  for (const MPoly& a : args) {
    for (std::size_t j = 1; j < width; ++j) {
      h[j] += a * h[j - 1];
    }
  }
  return h;
}

MPoly hpoly(const VarCtxPtr& ctx, int k, std::span<const MPoly> args) {
  if (k < 0) {
    throw UsageError("hpoly: negative degree");
  }
  return hpoly_table(ctx, k, args).back();
}

MPoly epoly(const VarCtxPtr& ctx, int k, std::span<const MPoly> args) {
  if (k < 0) {
    throw UsageError("epoly: negative degree");
  }
  const auto width = static_cast<std::size_t>(k) + 1;
  std::vector<MPoly> e(width, MPoly(ctx));
  e[0] = MPoly::constant(ctx, 1);
  for (const MPoly& a : args) {
    for (std::size_t j = width - 1; j >= 1; --j) {
      e[j] += a * e[j - 1];
    }
  }
  return e.back();
}

MPoly schur(const Partition& lam, const VarCtxPtr& ctx, std::span<const MPoly> args) {
  const int rows = lam.length();
  if (rows > static_cast<int>(args.size())) {
    return MPoly(ctx);
  }
  if (rows == 0) {
    return MPoly::constant(ctx, 1);
  }
  const int kmax = lam[0] + rows - 1;
  const std::vector<MPoly> h = hpoly_table(ctx, kmax, args);
  auto entry = [&](int i, int j) -> const MPoly* {
    const int k = lam[i] - i + j;
    return k < 0 ? nullptr : &h[static_cast<std::size_t>(k)];
  };

  // Laplace expansion down the rows, memoised on the set of columns already
  // used: minor[mask] is the determinant of rows popcount(mask).. against the
  // columns outside mask.
  const unsigned full = (1U << rows) - 1U;
  std::map<unsigned, MPoly> minor;
  std::function<const MPoly&(unsigned)> solve = [&](unsigned used) -> const MPoly& {
    if (auto it = minor.find(used); it != minor.end()) {
      return it->second;
    }
    MPoly value(ctx);
    if (used == full) {
      value = MPoly::constant(ctx, 1);
    } else {
      const int row = __builtin_popcount(used);
      int sign_position = 0;
      for (int col = 0; col < rows; ++col) {
        if (used & (1U << col)) {
          continue;
        }
        if (const MPoly* a = entry(row, col)) {
          const MPoly& rest = solve(used | (1U << col));
          if (!rest.is_zero()) {
            MPoly term = *a * rest;
            if (sign_position % 2 == 0) {
              value += term;
            } else {
              value -= term;
            }
          }
        }
        ++sign_position;
      }
    }
    return minor.emplace(used, std::move(value)).first->second;
  };
  return solve(0U);
}

MPoly schur_tableaux(const Partition& lam, const VarCtxPtr& ctx, std::span<const MPoly> args) {
  const int n = static_cast<int>(args.size());
  if (lam.length() > n) {
    return MPoly(ctx);
  }
  // Cells in row-major order; fill each with an entry in 1..n subject to rows
  // weakly increasing and columns strictly increasing. Tally by content.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lam.length(); ++i) {
    for (int j = 0; j < lam[i]; ++j) {
      cells.emplace_back(i, j);
    }
  }
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(lam.length()));
  for (int i = 0; i < lam.length(); ++i) {
    grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lam[i]), 0);
  }
  std::map<std::vector<int>, long> contents;
  std::vector<int> content(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++contents[content];
      return;
    }
    const auto [i, j] = cells[idx];
    int lo = 1;
    if (j > 0) {
      lo = std::max(lo, grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
    }
    if (i > 0) {
      lo = std::max(lo, grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1);
    }
    for (int v = lo; v <= n; ++v) {
      grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      fill(idx + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(0);

  MPoly total(ctx);
  for (const auto& [c, count] : contents) {
    MPoly term = MPoly::constant(ctx, Rat(count));
    for (int k = 0; k < n; ++k) {
      if (c[static_cast<std::size_t>(k)] > 0) {
        term *= args[static_cast<std::size_t>(k)].pow(static_cast<unsigned>(c[static_cast<std::size_t>(k)]));
      }
    }
    total += term;
  }
  return total;
}

} // namespace rszeta
