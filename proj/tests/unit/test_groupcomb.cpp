#include <set>

#include "doctest.h"
#include "rszeta/errors.hpp"
#include "rszeta/identities.hpp"

using namespace rszeta;

namespace {

// Exponent of |a_i| in alpha * twist * delta_{B_r}^{-1/2}, assembled from the
// block rule by hand: a_i sits at ambient position (i-1)nm + 1.
Rat collapse_power_oracle(int n, int m, int r, int i, LeviConvention conv) {
  const int nm = n * m;
  Rat levi_power;
  if (conv == LeviConvention::RBlocks) {
    levi_power = nm * (r - 2 * i + 1);
  } else {
    const int b = (i - 1) * nm / r + 1;
    levi_power = r * (nm - 2 * b + 1);
  }
  return make_rat((i - 1) * (nm - 2)) + make_rat(nm - 1, 2 * nm) * levi_power -
         make_rat(r - 2 * i + 1, 2);
}

} // namespace

TEST_CASE("wJ") {
  CHECK(build_wJ(1, 2, 1).cycles() == "(1 2)");
  CHECK(build_wJ(1, 1, 3) == PermMat::identity(3));
  CHECK(build_wJ(2, 1, 2).cycles() == "(1 2)(3 4)");
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int r = 1; r <= 3; ++r) {
        PermMat w = build_wJ(n, m, r);
        CHECK(w * w == PermMat::identity(n * m * r));
      }
}

TEST_CASE("w0 entries") {
  CHECK(build_w0(2, 3, 1) == PermMat::identity(6));
  const std::vector<std::pair<int, int>> expected = {{1, 1}, {3, 2}, {2, 3}, {4, 4}};
  CHECK(build_w0(1, 2, 2).entries() == expected);
  CHECK_THROWS_AS(PermMat::from_entries(3, {{1, 1}, {1, 2}, {3, 3}}), StructureError);
}

TEST_CASE("w0 is a bijection interleaving t0 for nrm <= 24") {
  for (int n = 1; n <= 24; ++n)
    for (int m = 1; n * m <= 24; ++m)
      for (int r = 1; n * m * r <= 24; ++r) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(r);
        const int nm = n * m;
        const int size = nm * r;
        PermMat w = build_w0(n, m, r);
        std::set<int> rows;
        for (auto [row, col] : w.entries()) rows.insert(row);
        CHECK(rows.size() == static_cast<std::size_t>(size));
        std::vector<int> t(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) t[static_cast<std::size_t>(i)] = 3 * i + 1;
        Cochar expected = Cochar::zero(size);
        for (int i = 0; i < r; ++i) expected.vals[static_cast<std::size_t>(i * nm)] = 3 * i + 1;
        CHECK(conj_cochar(w, embed_leading(Cochar(t), size)) == expected);
      }
}

TEST_CASE("conjugating cocharacters") {
  Cochar c({5, -2, 0, 7});
  CHECK(conj_cochar(PermMat::identity(4), c) == c);
  CHECK(conj_cochar(build_w0(1, 2, 2), Cochar({4, 9, 0, 0})) == Cochar({4, 0, 9, 0}));
  PermMat w = build_w0(1, 2, 2) * build_wJ(1, 2, 2);
  CHECK(conj_cochar(w, conj_cochar(w.inverse(), c)) == c);
}

TEST_CASE("pattern examples") {
  UnipotentPatterns p = build_patterns(1, 2, 1);
  CHECK(p.full.coords() == std::set<Coord>{{1, 2}});
  CHECK(p.full.charsupp() == std::set<Coord>{{1, 2}});
  CHECK(p.trimmed == p.lower_blocks);

  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) CHECK(build_patterns(n, m, 1).rest.size() == 0);

  UnipotentPatterns q = build_patterns(2, 1, 2);
  CHECK(q.conj_trimmed.size() == q.trimmed.size());
  CHECK(q.diag.size() + q.rest.size() == q.conj_trimmed.size());
  for (const auto& c : q.rest.coords()) CHECK_FALSE(q.diag.contains(c));
  CHECK(rest_matches_block_constraints(q));
}

TEST_CASE("U2/U3 split and alpha for nrm <= 18") {
  for (int n = 1; n <= 18; ++n)
    for (int m = 1; n * m <= 18; ++m)
      for (int r = 1; n * m * r <= 18; ++r) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(r);
        UnipotentPatterns p = build_patterns(n, m, r);
        std::set<Coord> joined = p.rest.coords();
        for (const auto& c : p.conj_trimmed.coords())
          if (p.diag.contains(c)) joined.insert(c);
        CHECK(joined == p.conj_trimmed.coords());
        for (const auto& c : p.rest.coords()) CHECK_FALSE(p.diag.contains(c));
        // every U^2 position is hit when the (1,2) block is not trimmed away
        if (n * m > 1) {
          CHECK(alpha_from_patterns(p) == alpha_closed_form(n, m, r));
          CHECK(rest_matches_block_constraints(p));
        }
      }
}

TEST_CASE("modular characters") {
  CHECK(delta_borel(2).q_exponent(Cochar({1, 0})) == -1);
  for (int size = 1; size <= 8; ++size) {
    CHECK(delta_parabolic(std::vector<int>(static_cast<std::size_t>(size), 1)) == delta_borel(size));
    Cochar lam = Cochar::zero(size);
    for (int i = 0; i < size; ++i) lam.vals[static_cast<std::size_t>(i)] = size - i + (i % 2);
    Rat expected = 0;
    for (int i = 1; i <= size; ++i) expected -= (size - 2 * i + 1) * lam[i - 1];
    CHECK(delta_borel(size).q_exponent(lam) == expected);
  }
  CHECK_THROWS_AS(delta_parabolic({2, 0, 1}), UsageError);

  // delta_P^{1/2}(diag(t I_r, I)) for n blocks of size r: |t|^{r^2(n-1)/2}.
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 4; ++r) {
      ExpChar half = make_rat(1, 2) * delta_parabolic(std::vector<int>(static_cast<std::size_t>(n), r));
      Cochar t = embed_leading(Cochar(std::vector<int>(static_cast<std::size_t>(r), 1)), n * r);
      CHECK(half.q_exponent(t) == -make_rat(r * r * (n - 1), 2));
    }
}

TEST_CASE("measure factor") {
  CHECK(conj_measure_factor(CoordSet(3)).is_trivial());
  CoordSet one(2);
  one.insert({1, 2});
  for (int k = 0; k <= 4; ++k) CHECK(conj_measure_factor(one).q_exponent(Cochar({k, 0})) == -k);
}

TEST_CASE("collapse under both Levi conventions") {
  for (int r = 1; r <= 5; ++r)
    for (int m = 1; m <= 5; ++m)
      for (int n = 1; n <= 4; ++n) {
        if (n * m == 1) continue;
        CAPTURE(r);
        CAPTURE(m);
        CAPTURE(n);
        for (auto conv : {LeviConvention::RBlocks, LeviConvention::NmBlocks}) {
          ExpChar lhs = collapse_lhs(n, m, r, conv);
          for (int i = 1; i <= r; ++i) {
            // a_i = b_i^n, so one unit of k_i is n units of valuation of a_i
            CHECK(lhs[i - 1] == -n * collapse_power_oracle(n, m, r, i, conv));
          }
        }
        CHECK(collapse_lhs(n, m, r, LeviConvention::RBlocks) == collapse_rhs(n, m, r));
        for (int i = 0; i < r; ++i)
          CHECK(collapse_rhs(n, m, r)[i] == -make_rat(n * (n * m - 2) * (r - 1), 2));
      }
  // r = 1 reduces to 0 = 0.
  CHECK(collapse_rhs(2, 3, 1).is_trivial());
  CHECK(collapse_lhs(2, 3, 1, LeviConvention::RBlocks).is_trivial());
}

TEST_CASE("scalar torus identities") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 5; ++r) {
      // -r(n-1)/(2n) + r^2(n-1)/2 as a |t|-power, i.e. minus that as a q-exponent
      Rat power = -make_rat(r * (n - 1), 2 * n) + make_rat(r * r * (n - 1), 2);
      CHECK(scalar_torus_displayed(n, r, 1)[0] == -power);
      CHECK(scalar_torus_displayed(n, r, -1)[0] == power);
      CHECK(scalar_torus_lhs(n, r, 1) == scalar_torus_displayed(n, r, 1));
      CHECK(scalar_torus_lhs(n, r, -1) == scalar_torus_displayed(n, r, -1));
    }
}

TEST_CASE("identity report") {
  auto checks = check_exponent_identities(5, 5, 4);
  int discrepancies = 0;
  for (const auto& c : checks) {
    CHECK(c.status() != CheckStatus::Fail);
    if (c.status() == CheckStatus::Discrepancy) {
      ++discrepancies;
      CHECK(c.name == "collapse[nm-blocks]");
      CHECK(c.correction() == c.computed - c.expected);
    }
    if (c.name == "collapse[r-blocks]") CHECK(c.holds());
  }
  CHECK(discrepancies > 0);
}

TEST_CASE("structure suite") {
  auto cases = check_structure(24, 18);
  int with_patterns = 0;
  for (const auto& sc : cases) {
    CAPTURE(sc.n);
    CAPTURE(sc.m);
    CAPTURE(sc.r);
    for (const auto& chk : sc.checks) {
      CAPTURE(chk.name);
      CHECK(chk.status == CheckStatus::Pass);
    }
    if (sc.n * sc.m * sc.r <= 18) ++with_patterns;
  }
  CHECK(with_patterns > 0);
}
