#include "doctest.h"
#include "helpers.hpp"
#include "rszeta/errors.hpp"
#include "rszeta/symmetric.hpp"
#include "rszeta/zeta.hpp"

using namespace rszeta;

namespace {

CaseSpec make_case(int r, int m, int n, int order, IntegralPath path = IntegralPath::Auto) {
  CaseSpec c;
  c.r = r;
  c.m = m;
  c.n = n;
  c.order = order;
  c.path = path;
  return c;
}

// prod_{i,j} (1 - x_i y_j X)^{-1} built independently of euler_product.
TruncSeries cauchy_product(const testutil::RS& s, int order) {
  TruncSeries out = TruncSeries::one(s.ctx, order);
  for (int i = 1; i <= s.r; ++i)
    for (int j = 1; j <= s.m; ++j) {
      TruncSeries geo(s.ctx, order);
      for (int d = 0; d <= order; ++d) geo.add_term(d, (s.x(i) * s.y(j)).pow(static_cast<unsigned>(d)));
      out *= geo;
    }
  return out;
}

} // namespace

TEST_CASE("Euler product examples") {
  testutil::RS s(1, 1);
  Parameters p = formal_parameters(1, 1);
  TruncSeries plain = euler_product(make_case(1, 1, 1, 2), p, EulerArgument::Plain);
  CHECK(plain == TruncSeries(s.ctx, {s.c(1), s.x(1) * s.y(1), s.x(1, 2) * s.y(1, 2)}));
  CHECK(euler_product(make_case(1, 1, 1, 0), p) == TruncSeries::one(s.ctx, 0));
  MPoly z = s.x(1, 2) * s.y(1, 2) * s.v();
  CHECK(euler_product(make_case(1, 1, 2, 4), p) ==
        TruncSeries(s.ctx, {s.c(1), MPoly(s.ctx), z, MPoly(s.ctx), z.pow(2)}));
}

TEST_CASE("classical integral examples") {
  testutil::RS s(1, 2);
  Parameters p = formal_parameters(1, 2);
  TruncSeries got = eval_classical(make_case(1, 2, 1, 1), p);
  CHECK(got[0] == s.c(1));
  CHECK(got[1] == s.x(1) * (s.y(1) + s.y(2)));
}

TEST_CASE("classical integral is the Cauchy product for r < m <= 4") {
  for (int m = 2; m <= 4; ++m)
    for (int r = 1; r < m; ++r)
      for (int order : {0, 3, 6}) {
        CAPTURE(r);
        CAPTURE(m);
        testutil::RS s(r, m);
        Parameters p = formal_parameters(r, m);
        TruncSeries lhs = eval_classical(make_case(r, m, 1, order), p);
        CHECK(lhs == cauchy_product(s, order));
        CHECK(lhs == euler_product(make_case(r, m, 1, order), p, EulerArgument::Plain));
      }
}

TEST_CASE("chain examples") {
  testutil::RS s(1, 2);
  Parameters p = formal_parameters(1, 2);
  TruncSeries got = eval_chain(make_case(1, 2, 1, 3), p);
  CHECK(got[0] == s.c(1));
  CHECK(got == cauchy_product(s, 3));

  Parameters p2 = formal_parameters(2, 1);
  CHECK(eval_chain(make_case(2, 1, 2, 8), p2) == euler_product(make_case(2, 1, 2, 8), p2));
  CHECK_THROWS_AS(eval_chain(make_case(2, 1, 1, 4), p2), UsageError);
}

TEST_CASE("chain equals the shifted Euler product for nrm <= 12") {
  for (int n = 1; n <= 12; ++n)
    for (int m = 1; n * m <= 12; ++m)
      for (int r = 1; n * m * r <= 12; ++r) {
        if (n * m == 1) continue;
        CAPTURE(r);
        CAPTURE(m);
        CAPTURE(n);
        Parameters p = formal_parameters(r, m);
        CaseSpec c = make_case(r, m, n, 8, IntegralPath::Chain);
        CHECK(eval_chain(c, p) == euler_product(c, p));
      }
}

TEST_CASE("rank-one integral examples") {
  testutil::RS s(1, 2);
  Parameters p = formal_parameters(1, 2);
  CHECK(eval_rank_one(make_case(1, 2, 1, 0), p) == TruncSeries::one(s.ctx, 0));
  std::vector<MPoly> y = s.ys();
  TruncSeries expected(s.ctx, {s.c(1), s.x(1) * (s.y(1) + s.y(2)), s.x(1, 2) * hpoly(s.ctx, 2, y)});
  CHECK(eval_rank_one(make_case(1, 2, 1, 2), p) == expected);

  testutil::RS t(1, 1);
  Parameters p1 = formal_parameters(1, 1);
  MPoly z = t.x(1, 2) * t.y(1, 2) * t.v();
  CHECK(eval_rank_one(make_case(1, 1, 2, 4), p1) ==
        TruncSeries(t.ctx, {t.c(1), MPoly(t.ctx), z, MPoly(t.ctx), z.pow(2)}));
}

TEST_CASE("the two rank-one routes agree") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      if (n * m == 1) continue;
      Parameters p = formal_parameters(1, m);
      CaseSpec c = make_case(1, m, n, 9);
      TruncSeries direct = eval_rank_one(c, p);
      CHECK(direct == eval_chain(c, p));
      CHECK(direct == euler_product(c, p));
    }
}

TEST_CASE("path resolution") {
  CHECK(resolve_path(make_case(1, 2, 1, 6)) == IntegralPath::Classical);
  CHECK(resolve_path(make_case(2, 2, 2, 6)) == IntegralPath::Chain);
  CHECK_THROWS_AS(resolve_path(make_case(3, 2, 1, 6)), UsageError);
  CHECK_THROWS_AS(resolve_path(make_case(2, 2, 1, 6, IntegralPath::RankOne)), UsageError);
  CHECK_THROWS_AS(resolve_path(make_case(1, 1, 1, 6, IntegralPath::Chain)), UsageError);
  CHECK(resolve_path(make_case(3, 2, 1, 6, IntegralPath::Chain)) == IntegralPath::Chain);
  CHECK_THROWS_AS(verify_theorem1(make_case(3, 2, 1, 6)), UsageError);
  CHECK(parse_path("rank1") == IntegralPath::RankOne);
  CHECK_THROWS_AS(parse_mode("numeric"), UsageError);
}

TEST_CASE("theorem 1 examples") {
  for (const CaseSpec& c : {make_case(1, 2, 1, 6), make_case(2, 3, 1, 6), make_case(2, 2, 2, 8)}) {
    VerificationReport rep = verify_theorem1(c, 5);
    CAPTURE(rep.diagnostic);
    CHECK(rep.status == Verdict::Equal);
    CHECK(rep.mismatches.empty());
    CHECK(rep.lhs_digest == rep.rhs_digest);
    for (const auto& chk : rep.checks) {
      CAPTURE(chk.name);
      CHECK(chk.status != CheckStatus::Fail);
    }
  }
}

TEST_CASE("specialized mode") {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    CaseSpec c = make_case(2, 2, 2, 8);
    c.mode = Mode::Specialized;
    c.seed = seed;
    CHECK(verify_theorem1(c, 0).status == Verdict::Equal);
  }
  Parameters a = specialized_parameters(2, 3, 11);
  Parameters b = specialized_parameters(2, 3, 11);
  CHECK(a.assignment == b.assignment);
  CHECK(a.assignment != specialized_parameters(2, 3, 12).assignment);
}

TEST_CASE("perturbation is detected") {
  for (const CaseSpec& base : {make_case(1, 2, 1, 6), make_case(2, 1, 2, 8), make_case(1, 2, 2, 8, IntegralPath::RankOne)}) {
    CaseSpec c = base;
    c.perturb = true;
    VerificationReport rep = verify_theorem1(c, 0);
    CHECK(rep.status == Verdict::Mismatch);
    CHECK_FALSE(rep.mismatches.empty());
  }
}

TEST_CASE("comparator") {
  testutil::RS s(1, 1);
  TruncSeries a(s.ctx, {s.c(1), s.x(1), s.y(1)});
  TruncSeries b(s.ctx, {s.c(1), s.x(1), s.x(1)});
  auto diff = compare_series(a, b);
  REQUIRE(diff.size() == 1);
  CHECK(diff[0].degree == 2);
  CHECK(compare_series(a, a).empty());
  CHECK(series_digest(a) == "1:1:1");
}
