#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rszeta/mpoly.hpp"
#include "rszeta/partition.hpp"

namespace rszeta {

// The symmetric functions below accept arbitrary polynomial values for their
// arguments, so the same code serves formal variables (x1, y2, ...), powers of
// them (y_j^n), and numeric specializations.

// Monomials for the given slots of ctx.
std::vector<MPoly> variables(const VarCtxPtr& ctx, std::span<const std::size_t> slots);

// Complete homogeneous symmetric polynomial h_k.
MPoly hpoly(const VarCtxPtr& ctx, int k, std::span<const MPoly> args);

// h_0..h_kmax in one pass.
std::vector<MPoly> hpoly_table(const VarCtxPtr& ctx, int kmax, std::span<const MPoly> args);

// Elementary symmetric polynomial e_k.
MPoly epoly(const VarCtxPtr& ctx, int k, std::span<const MPoly> args);

// Schur polynomial via the Jacobi-Trudi determinant det(h_{lam_i - i + j}).
// Returns zero when lam has more nonzero parts than there are arguments.
MPoly schur(const Partition& lam, const VarCtxPtr& ctx, std::span<const MPoly> args);

// Schur polynomial by enumerating semistandard Young tableaux. Much slower;
// kept as an independent cross-check of schur().
MPoly schur_tableaux(const Partition& lam, const VarCtxPtr& ctx, std::span<const MPoly> args);

} // namespace rszeta
