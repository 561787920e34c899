#pragma once

#include <string>
#include <vector>

#include "rszeta/expchar.hpp"
#include "rszeta/patterns.hpp"

namespace rszeta {

// Which parabolic of GL_{nrm} supplies the modular-character twist of the
// induced representation when evaluated on w0 t0 w0^{-1}:
//   RBlocks:  Levi GL_{nm} x ... x GL_{nm} (r blocks), the block structure the
//             torus element diag(A_1, ..., A_r) is compatible with;
//   NmBlocks: Levi GL_r x ... x GL_r (nm blocks).
enum class LeviConvention { RBlocks, NmBlocks };

std::string to_string(LeviConvention c);

// w0 diag(t, I) w0^{-1} for t = diag(p^{a_1}, ..., p^{a_r}).
Cochar conjugated_torus(int n, int m, int r, const Cochar& t);

// All functionals below live on the valuations (a_1, ..., a_r) of t unless noted.

// prod_i |a_i|^{(i-1)(nm-2)}.
ExpChar alpha_closed_form(int n, int m, int r);

// Jacobian of moving w0 t0 w0^{-1} across U^3, computed from the coordinate set.
ExpChar alpha_from_patterns(const UnipotentPatterns& p);

// delta^{(nm-1)/(2nm)} on GL_{nrm} (ambient coordinates).
ExpChar levi_twist_ambient(int n, int m, int r, LeviConvention convention);

// levi_twist_ambient pulled back along t -> w0 t0 w0^{-1}.
ExpChar levi_twist(int n, int m, int r, LeviConvention convention);

// alpha * levi twist * delta_{B_r}^{-1/2} as a functional of the valuations
// (k_1, ..., k_r) of b_i, where a_i = b_i^n.
ExpChar collapse_lhs(int n, int m, int r, LeviConvention convention);

// |b_1 ... b_r|^{n(nm-2)(r-1)/2} on the same variables.
ExpChar collapse_rhs(int n, int m, int r);

// Scalar torus t I_r inside GL_{nr}: |t I_r|^{-(n-1)/(2n)} delta_{P}^{1/2}
// with P of Levi type (r, ..., r) (n blocks), evaluated at t^{sign}, as a
// functional of the valuation of t. `displayed` is the closed form
// t^{sign * (-r(n-1)/(2n) + r^2(n-1)/2)} in the same convention.
ExpChar scalar_torus_lhs(int n, int r, int sign);
ExpChar scalar_torus_displayed(int n, int r, int sign);

enum class CheckKind { Build, Display };
enum class CheckStatus { Pass, Fail, Discrepancy };

std::string to_string(CheckStatus s);

struct IdentityCheck {
  std::string name;
  int r = 0;
  int m = 0;
  int n = 0;
  CheckKind kind = CheckKind::Display;
  ExpChar expected;
  ExpChar computed;

  bool holds() const { return expected == computed; }
  // computed - expected: the factor that would have to be divided out.
  ExpChar correction() const { return computed - expected; }
  CheckStatus status() const;
};

// Exponent identities of the unfolding for 1 <= r <= rmax, 1 <= m <= mmax,
// 1 <= n <= nmax. The collapse checks need nm > 1 and are skipped otherwise.
std::vector<IdentityCheck> check_exponent_identities(int rmax, int mmax, int nmax);

struct NamedResult {
  std::string name;
  CheckStatus status;
};

struct StructureCase {
  int n = 0;
  int m = 0;
  int r = 0;
  std::vector<NamedResult> checks;
  bool all_pass() const;
};

// Weyl-element and pattern checks for every (n, m, r) with nrm <= max_weyl;
// the pattern and Jacobian checks are included when nrm <= max_patterns.
std::vector<StructureCase> check_structure(int max_weyl = 24, int max_patterns = 18);

// The pattern checks for one size (also used per-case by the verifier).
std::vector<NamedResult> pattern_checks(const UnipotentPatterns& p);
std::vector<NamedResult> weyl_checks(int n, int m, int r);

} // namespace rszeta
