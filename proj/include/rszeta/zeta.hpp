#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "rszeta/identities.hpp"
#include "rszeta/series.hpp"
#include "rszeta/whittaker.hpp"

namespace rszeta {

enum class Mode { Symbolic, Specialized };

// Which torus-sum evaluation stands on the integral side of the comparison.
//   Classical: the GL_r x GL_m integral with linear-group Whittaker functions (n = 1, r < m).
//   RankOne:   the r = 1 integral summed directly over GL_1 (nm > 1).
//   Chain:     the generating-function integral reduced to rank-one sums (nm > 1).
// Auto picks Classical for n = 1 and Chain otherwise.
enum class IntegralPath { Auto, Classical, RankOne, Chain };

std::string to_string(Mode m);
std::string to_string(IntegralPath p);
Mode parse_mode(const std::string& s);
IntegralPath parse_path(const std::string& s);

struct CaseSpec {
  int r = 1;
  int m = 1;
  int n = 1;
  int order = 6;
  Mode mode = Mode::Symbolic;
  std::uint64_t seed = 0;
  IntegralPath path = IntegralPath::Auto;
  // Corrupts the first nontrivial Whittaker oracle value (comparator soundness).
  bool perturb = false;

  bool operator==(const CaseSpec&) const = default;
};

// Concrete path for the case; throws UsageError naming the supported paths.
IntegralPath resolve_path(const CaseSpec& spec);

// Satake parameters of pi (x_1..x_r), tau (y_1..y_m) and q^{1/2}, formal or
// specialized to rationals. `assignment` maps every slot to the value used
// (empty in symbolic mode).
struct Parameters {
  VarCtxPtr ctx;
  std::vector<MPoly> x;
  std::vector<MPoly> y;
  RootQ root_q;
  Assignment assignment;

  SatakeParams pi(int cover_degree) const { return make_satake(cover_degree, x, root_q); }
  SatakeParams tau(int cover_degree) const { return make_satake(cover_degree, y, root_q); }
};

Parameters formal_parameters(int r, int m);
// Nonzero random rationals (numerators and denominators below 10) for every
// slot, drawn deterministically from the seed.
Parameters specialized_parameters(int r, int m, std::uint64_t seed);
Parameters parameters_for(const CaseSpec& spec);

// Shifted: the Euler factor at ns - (n-1)/2, i.e. X -> X^n v^{n-1}.
// Plain:   the Euler factor in X = q^{-s} itself.
enum class EulerArgument { Shifted, Plain };

// prod_{i,j} (1 - x_i^n y_j^n T)^{-1} with T per the argument choice.
TruncSeries euler_product(const CaseSpec& spec, const Parameters& params,
                          EulerArgument argument = EulerArgument::Shifted);

// Iwasawa torus sum of the classical integral: dominant lam with |lam| <= D of
// delta_{B_r}^{-1} W_pi(p^lam) W_tau(diag(p^lam, I)) |p^lam|^{s-(m-r)/2}.
// Asserts that the v-powers cancel in every summand.
TruncSeries eval_classical(const CaseSpec& spec, const Parameters& params);

// The generating-function integral reduced to the torus: k >= 0 with
// n|k| <= D, t = diag(p^{nk_i}), summand
//   chi(t) delta_{B_r}^{1/2}(t) alpha(t) levi_value(t) delta_{B_r}^{-1}(t) |t|^{s'}
// with s' = s - (nmr - 2r + 1)/2 and alpha read off the U^3 pattern.
TruncSeries eval_chain(const CaseSpec& spec, const Parameters& params);

// r = 1: sum_k x^k W(diag(p^k, I_{nm-1})) |p^k|^{s-(nm-1)/2}.
TruncSeries eval_rank_one(const CaseSpec& spec, const Parameters& params);

// The integral side for the resolved path.
TruncSeries eval_integral(const CaseSpec& spec, const Parameters& params);

struct Mismatch {
  int degree = 0;
  std::string diff;

  bool operator==(const Mismatch&) const = default;
};

// Degrees at which a and b differ, with a - b rendered.
std::vector<Mismatch> compare_series(const TruncSeries& a, const TruncSeries& b);

// Term counts per degree, e.g. "1:3:9".
std::string series_digest(const TruncSeries& s);

enum class Verdict { Equal, Mismatch, PaperDiscrepancy, Error };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct VerificationReport {
  CaseSpec spec;
  IntegralPath path = IntegralPath::Auto;
  Verdict status = Verdict::Error;
  std::vector<Mismatch> mismatches;
  std::vector<NamedResult> checks;
  std::string lhs_digest;
  std::string rhs_digest;
  std::string diagnostic;
  std::chrono::milliseconds elapsed{0};
};

// Compares the integral against the Euler product coefficient by coefficient
// up to the truncation order. Unsupported cases throw UsageError; failures
// during evaluation are caught and reported with Verdict::Error. In symbolic
// mode the result is also checked against `specialization_seeds` independent
// specialized evaluations.
VerificationReport verify_theorem1(const CaseSpec& spec, int specialization_seeds = 20);

} // namespace rszeta
