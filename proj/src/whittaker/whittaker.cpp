#include "rszeta/whittaker.hpp"

#include "rszeta/errors.hpp"
#include "rszeta/expchar.hpp"
#include "rszeta/symmetric.hpp"

namespace rszeta {

RootQ RootQ::formal(VarCtxPtr ctx) {
  if (!ctx->laurent_slot()) {
    throw UsageError("RootQ::formal: context has no Laurent slot for q^{1/2}");
  }
  return RootQ(std::move(ctx), std::nullopt);
}

RootQ RootQ::numeric(VarCtxPtr ctx, const Rat& value) {
  if (value == 0) {
    throw UsageError("RootQ::numeric: q^{1/2} must be nonzero");
  }
  return RootQ(std::move(ctx), value);
}

MPoly RootQ::pow(int e) const {
  if (value_) {
    return MPoly::constant(ctx_, rszeta::pow(*value_, e));
  }
  return MPoly::variable(ctx_, *ctx_->laurent_slot(), e);
}

SatakeParams make_satake(int cover_degree, std::vector<MPoly> values, RootQ root_q) {
  if (cover_degree < 1) {
    throw UsageError("make_satake: cover degree must be positive");
  }
  for (const MPoly& v : values) {
    if (!same_ctx(v.ctx(), root_q.ctx())) {
      throw UsageError("make_satake: parameter has a different variable context");
    }
  }
  return SatakeParams{cover_degree, std::move(values), std::move(root_q)};
}

MPoly cs_value(const SatakeParams& params, const Cochar& lam) {
  if (params.cover_degree != 1) {
    throw UsageError("cs_value: only the linear group (cover degree 1) is supported");
  }
  if (lam.size() != params.group_rank()) {
    throw UsageError("cs_value: cocharacter length " + std::to_string(lam.size()) +
                     " does not match group rank " + std::to_string(params.group_rank()));
  }
  if (!lam.is_dominant()) {
    return MPoly(params.ctx());
  }
  if (lam.size() > 0 && lam[lam.size() - 1] < 0) {
    throw UsageError("cs_value: dominant cocharacter " + lam.to_string() +
                     " has negative entries; Satake parameters are not invertible here");
  }
  const int half_modulus = (make_rat(1, 2) * delta_borel(lam.size())).v_exponent(lam);
  MPoly s = schur(Partition(lam.vals), params.ctx(), params.values);
  return s * params.root_q.pow(half_modulus);
}

MPoly speh_rank1_value(const SatakeParams& params, int k) {
  const int n = params.cover_degree;
  const int m = params.group_rank();
  if (n * m <= 1) {
    throw UsageError("speh_rank1_value: requires nm > 1");
  }
  if (k < 0) {
    return MPoly(params.ctx());
  }
  std::vector<MPoly> powered;
  powered.reserve(params.values.size());
  for (const MPoly& y : params.values) {
    powered.push_back(y.pow(static_cast<unsigned>(n)));
  }
  return hpoly(params.ctx(), k, powered) * params.root_q.pow(-k * (n * n * m - 2 * n + 1));
}

MPoly speh_rank1_at_valuation(const SatakeParams& params, int valuation) {
  const int n = params.cover_degree;
  if (valuation < 0 || valuation % n != 0) {
    if (n * params.group_rank() <= 1) {
      throw UsageError("speh_rank1_at_valuation: requires nm > 1");
    }
    return MPoly(params.ctx());
  }
  return speh_rank1_value(params, valuation / n);
}

MPoly levi_value(const SatakeParams& params, int r, const Cochar& a_valuations,
                 LeviConvention convention) {
  const int n = params.cover_degree;
  const int m = params.group_rank();
  if (a_valuations.size() != r) {
    throw UsageError("levi_value: expected " + std::to_string(r) + " valuations");
  }
  MPoly product = MPoly::constant(params.ctx(), 1);
  for (int i = 0; i < r; ++i) {
    MPoly w = speh_rank1_at_valuation(params, a_valuations[i]);
    if (w.is_zero()) {
      return w;
    }
    product *= w;
  }
  // Throws if the twist is not a whole power of q^{1/2} at this point.
  const Cochar image = conjugated_torus(n, m, r, a_valuations);
  const int twist = levi_twist_ambient(n, m, r, convention).v_exponent(image);
  return product * params.root_q.pow(twist);
}

} // namespace rszeta
