#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rszeta/identities.hpp"
#include "rszeta/mpoly.hpp"
#include "rszeta/weyl.hpp"

namespace rszeta {

// q^{1/2}, either the formal Laurent variable v of a context or a nonzero
// rational number (specialized evaluation).
class RootQ {
public:
  static RootQ formal(VarCtxPtr ctx);
  static RootQ numeric(VarCtxPtr ctx, const Rat& value);

  const VarCtxPtr& ctx() const { return ctx_; }
  bool is_formal() const { return !value_; }
  // v^e as a polynomial (a monomial when formal, a constant otherwise).
  MPoly pow(int e) const;

private:
  RootQ(VarCtxPtr ctx, std::optional<Rat> value) : ctx_(std::move(ctx)), value_(std::move(value)) {}
  VarCtxPtr ctx_;
  std::optional<Rat> value_;
};

// Satake parameters of an unramified representation of GL_N^{(n)}: one value
// per torus coordinate (formal variables or their specializations).
struct SatakeParams {
  int cover_degree = 1;
  std::vector<MPoly> values;
  RootQ root_q;

  int group_rank() const { return static_cast<int>(values.size()); }
  const VarCtxPtr& ctx() const { return root_q.ctx(); }
};

SatakeParams make_satake(int cover_degree, std::vector<MPoly> values, RootQ root_q);

// Normalized spherical Whittaker function of the GL_N principal series at
// diag(p^lam): delta_B^{1/2}(p^lam) s_lam(params) for dominant lam, 0 for
// non-dominant lam. Requires cover_degree == 1. Dominant lam with negative
// entries would need inverse Satake parameters and is rejected.
MPoly cs_value(const SatakeParams& params, const Cochar& lam);

// Whittaker function of the unramified constituent of the Speh-type induced
// representation of GL_{nm}^{(n)} at diag(p^{nk}, I_{nm-1}):
//   h_k(y_1^n, ..., y_m^n) * v^{-k(n^2 m - 2n + 1)}.
// params: the m Satake parameters of the GL_m^{(n)} representation, with
// cover_degree n. Requires nm > 1. Zero for k < 0.
MPoly speh_rank1_value(const SatakeParams& params, int k);

// Same function indexed by the valuation of the corner entry; zero unless the
// valuation is a nonnegative multiple of n.
MPoly speh_rank1_at_valuation(const SatakeParams& params, int valuation);

// prod_i W(diag(p^{a_i}, I_{nm-1})) * delta^{(nm-1)/(2nm)}(w0 t0 w0^{-1}) for
// t = diag(p^{a_1}, ..., p^{a_r}), with the modular character taken on the
// given Levi convention. Zero if any a_i is negative or not divisible by n.
MPoly levi_value(const SatakeParams& params, int r, const Cochar& a_valuations,
                 LeviConvention convention = LeviConvention::RBlocks);

} // namespace rszeta
