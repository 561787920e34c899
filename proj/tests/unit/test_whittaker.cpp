#include "doctest.h"
#include "helpers.hpp"
#include "rszeta/errors.hpp"
#include "rszeta/zeta.hpp"

using namespace rszeta;

namespace {

// c_k read off prod_j (1 - x^n y_j^n X^n v^{n-1})^{-1}: the X^{nk} coefficient
// must be x^{nk} c_k v^{nk(nm-1)}.
MPoly rank1_by_series_division(const Parameters& p, int m, int n, int k) {
  const int order = n * k;
  const auto& ctx = p.ctx;
  TruncSeries prod = TruncSeries::one(ctx, order);
  for (int j = 0; j < m; ++j) {
    TruncSeries f = TruncSeries::one(ctx, order);
    f.add_term(n, -(p.x[0].pow(static_cast<unsigned>(n)) * p.y[static_cast<std::size_t>(j)].pow(static_cast<unsigned>(n)) *
                    p.root_q.pow(n - 1)));
    prod *= f.inverse();
  }
  MPoly::Exponents e(ctx->size(), 0);
  e[0] = n * k;
  e[ctx->size() - 1] = n * k * (n * m - 1);
  return prod[order].divide_by_monomial(e);
}

} // namespace

TEST_CASE("Casselman-Shalika values") {
  Parameters p = formal_parameters(1, 2);
  SatakeParams tau = p.tau(1);
  testutil::RS s(1, 2);
  CHECK(cs_value(tau, Cochar({0, 0})) == s.c(1));
  CHECK(cs_value(tau, Cochar({1, 0})) == s.v(-1) * (s.y(1) + s.y(2)));
  CHECK(cs_value(tau, Cochar({0, 1})).is_zero());
  CHECK_THROWS_AS(cs_value(tau, Cochar({1, 0, 0})), UsageError);
  CHECK_THROWS_AS(cs_value(p.tau(2), Cochar({1, 0})), UsageError);
  // (2,1): delta_B^{1/2} = q^{-1/2} and s_(2,1)(y1,y2) = y1^2 y2 + y1 y2^2
  CHECK(cs_value(tau, Cochar({2, 1})) == s.v(-1) * (s.y(1, 2) * s.y(2) + s.y(1) * s.y(2, 2)));
}

TEST_CASE("rank-one values by series division") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      if (n * m == 1) continue;
      Parameters p = formal_parameters(1, m);
      for (int k = 0; k <= 6; ++k) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(speh_rank1_value(p.tau(n), k) == rank1_by_series_division(p, m, n, k));
      }
    }
}

TEST_CASE("rank-one examples") {
  testutil::RS s(1, 1);
  Parameters p = formal_parameters(1, 1);
  CHECK(speh_rank1_value(p.tau(2), 0) == s.c(1));
  CHECK(speh_rank1_value(p.tau(2), 1) == s.y(1, 2) * s.v(-1));
  CHECK(speh_rank1_value(p.tau(2), -1).is_zero());
  CHECK(speh_rank1_at_valuation(p.tau(2), 3).is_zero());
  CHECK(speh_rank1_at_valuation(p.tau(2), 2) == speh_rank1_value(p.tau(2), 1));
  CHECK_THROWS_AS(speh_rank1_value(p.tau(1), 1), UsageError);
}

TEST_CASE("rank-one values agree with Casselman-Shalika at n = 1") {
  for (int m = 2; m <= 4; ++m) {
    Parameters p = formal_parameters(1, m);
    for (int k = 0; k <= 6; ++k) {
      Cochar lam = Cochar::zero(m);
      lam.vals[0] = k;
      CHECK(speh_rank1_value(p.tau(1), k) == cs_value(p.tau(1), lam));
    }
  }
}

TEST_CASE("Levi values") {
  Parameters p = formal_parameters(2, 2);
  SatakeParams tau = p.tau(2);
  testutil::RS s(2, 2);
  CHECK(levi_value(tau, 2, Cochar({0, 0})) == s.c(1));
  CHECK(levi_value(tau, 2, Cochar({-2, 2})).is_zero());
  CHECK(levi_value(tau, 2, Cochar({1, 0})).is_zero());

  Parameters p1 = formal_parameters(1, 3);
  for (int k = 0; k <= 4; ++k)
    CHECK(levi_value(p1.tau(2), 1, Cochar({2 * k})) == speh_rank1_value(p1.tau(2), k));

  // (r, m, n) = (2, 2, 2): delta_Q^{3/8} with Q of type (4, 4) is
  // |a_1|^{3/2} |a_2|^{-3/2}, i.e. v^{-3 a_1 + 3 a_2}.
  MPoly got = levi_value(tau, 2, Cochar({2, 4}));
  MPoly expected = speh_rank1_value(tau, 1) * speh_rank1_value(tau, 2) * s.v(-3 * 2 + 3 * 4);
  CHECK(got == expected);
}

TEST_CASE("numeric root of q") {
  Parameters p = specialized_parameters(1, 2, 5);
  CHECK_FALSE(p.root_q.is_formal());
  CHECK(p.root_q.pow(0).is_constant());
  for (const auto& [slot, value] : p.assignment) CHECK(value != 0);
}
