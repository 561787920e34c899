#include "rszeta/zeta.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "rszeta/errors.hpp"
#include "rszeta/expchar.hpp"
#include "rszeta/partition.hpp"
#include "rszeta/patterns.hpp"

namespace rszeta {

std::string to_string(Mode m) { return m == Mode::Symbolic ? "symbolic" : "specialized"; }

std::string to_string(IntegralPath p) {
  switch (p) {
  case IntegralPath::Auto:
    return "auto";
  case IntegralPath::Classical:
    return "classical";
  case IntegralPath::RankOne:
    return "rank1";
  case IntegralPath::Chain:
    return "chain";
  }
  return "auto";
}

Mode parse_mode(const std::string& s) {
  if (s == "symbolic") {
    return Mode::Symbolic;
  }
  if (s == "specialized") {
    return Mode::Specialized;
  }
  throw UsageError("unknown mode '" + s + "' (expected symbolic|specialized)");
}

IntegralPath parse_path(const std::string& s) {
  for (IntegralPath p : {IntegralPath::Auto, IntegralPath::Classical, IntegralPath::RankOne,
                         IntegralPath::Chain}) {
    if (to_string(p) == s) {
      return p;
    }
  }
  throw UsageError("unknown path '" + s + "' (expected auto|classical|rank1|chain)");
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Equal:
    return "EQUAL";
  case Verdict::Mismatch:
    return "MISMATCH";
  case Verdict::PaperDiscrepancy:
    return "PAPER_DISCREPANCY";
  case Verdict::Error:
    return "ERROR";
  }
  return "ERROR";
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::Equal, Verdict::Mismatch, Verdict::PaperDiscrepancy, Verdict::Error}) {
    if (to_string(v) == s) {
      return v;
    }
  }
  throw UsageError("unknown status '" + s + "'");
}

namespace {

const char* const kSupportedPaths =
    "supported paths: classical (n=1, r<m), rank1 (r=1, nm>1), chain (nm>1); "
    "auto selects classical when n=1 and chain otherwise";

[[noreturn]] void unsupported(const CaseSpec& s, const std::string& why) {
  std::ostringstream os;
  os << "unsupported case (r,m,n)=(" << s.r << "," << s.m << "," << s.n << "): " << why << "; "
     << kSupportedPaths;
  throw UsageError(os.str());
}

} // namespace

IntegralPath resolve_path(const CaseSpec& s) {
  if (s.r < 1 || s.m < 1 || s.n < 1) {
    unsupported(s, "r, m, n must be positive");
  }
  if (s.order < 0) {
    unsupported(s, "truncation order must be nonnegative");
  }
  IntegralPath p = s.path;
  if (p == IntegralPath::Auto) {
    p = s.n == 1 ? IntegralPath::Classical : IntegralPath::Chain;
  }
  switch (p) {
  case IntegralPath::Classical:
    if (s.n != 1) {
      unsupported(s, "the classical path requires n=1");
    }
    if (s.r >= s.m) {
      unsupported(s, "the n=1 path requires r<m");
    }
    break;
  case IntegralPath::RankOne:
    if (s.r != 1 || s.n * s.m <= 1) {
      unsupported(s, "the rank1 path requires r=1 and nm>1");
    }
    break;
  case IntegralPath::Chain:
    if (s.n * s.m <= 1) {
      unsupported(s, "the chain path requires nm>1");
    }
    break;
  case IntegralPath::Auto:
    break;
  }
  return p;
}

Parameters formal_parameters(int r, int m) {
  VarCtxPtr ctx = VarCtx::rankin_selberg(r, m);
  Parameters p{ctx, {}, {}, RootQ::formal(ctx), {}};
  for (int i = 0; i < r; ++i) {
    p.x.push_back(MPoly::variable(ctx, static_cast<std::size_t>(i)));
  }
  for (int j = 0; j < m; ++j) {
    p.y.push_back(MPoly::variable(ctx, static_cast<std::size_t>(r + j)));
  }
  return p;
}

Parameters specialized_parameters(int r, int m, std::uint64_t seed) {
  VarCtxPtr ctx = VarCtx::rankin_selberg(r, m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::bernoulli_distribution negative(0.5);
  auto draw = [&] {
    const long a = num(rng);
    const long b = den(rng);
    return make_rat(negative(rng) ? -a : a, b);
  };
  Assignment assignment;
  for (std::size_t slot = 0; slot < ctx->size(); ++slot) {
    assignment.emplace(slot, draw());
  }
  const Rat v_value = assignment.at(*ctx->laurent_slot());
  Parameters p{ctx, {}, {}, RootQ::numeric(ctx, v_value), assignment};
  for (int i = 0; i < r; ++i) {
    p.x.push_back(MPoly::constant(ctx, assignment.at(static_cast<std::size_t>(i))));
  }
  for (int j = 0; j < m; ++j) {
    p.y.push_back(MPoly::constant(ctx, assignment.at(static_cast<std::size_t>(r + j))));
  }
  return p;
}

Parameters parameters_for(const CaseSpec& spec) {
  return spec.mode == Mode::Symbolic ? formal_parameters(spec.r, spec.m)
                                     : specialized_parameters(spec.r, spec.m, spec.seed);
}

TruncSeries euler_product(const CaseSpec& spec, const Parameters& params, EulerArgument argument) {
  const int n = spec.n;
  const int degree = argument == EulerArgument::Shifted ? n : 1;
  const MPoly shift = argument == EulerArgument::Shifted ? params.root_q.pow(n - 1)
                                                         : MPoly::constant(params.ctx, 1);
  TruncSeries total = TruncSeries::one(params.ctx, spec.order);
  for (const MPoly& xi : params.x) {
    for (const MPoly& yj : params.y) {
      TruncSeries factor = TruncSeries::one(params.ctx, spec.order);
      factor.add_term(degree, -((xi * yj).pow(static_cast<unsigned>(n)) * shift));
      total *= factor.inverse();
    }
  }
  return total;
}

namespace {

// Pads a partition with zeros to a cocharacter of the given length.
Cochar padded(const Partition& lam, int size) {
  Cochar c = Cochar::zero(size);
  for (int i = 0; i < lam.length(); ++i) {
    c.vals[static_cast<std::size_t>(i)] = lam[i];
  }
  return c;
}

// Calls visit(k) for every k in Z_{>=0}^r with sum(k) <= bound.
void for_each_bounded(int r, int bound, const std::function<void(const Cochar&)>& visit) {
  Cochar k = Cochar::zero(r);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == r) {
      visit(k);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      k.vals[static_cast<std::size_t>(i)] = v;
      rec(i + 1, remaining - v);
    }
    k.vals[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, bound);
}

} // namespace

TruncSeries eval_classical(const CaseSpec& spec, const Parameters& params) {
  if (resolve_path(spec) != IntegralPath::Classical) {
    throw UsageError("eval_classical: case is not on the classical path");
  }
  const int r = spec.r;
  const int m = spec.m;
  const SatakeParams pi = params.pi(1);
  const SatakeParams tau = params.tau(1);
  const ExpChar half_borel_r = make_rat(1, 2) * delta_borel(r);
  const ExpChar half_borel_m = make_rat(1, 2) * delta_borel(m);
  const ExpChar inv_borel_r = Rat(-2) * half_borel_r;

  TruncSeries out(params.ctx, spec.order);
  for (const Partition& lam : partitions_up_to(spec.order, r)) {
    const Cochar on_r = padded(lam, r);
    const Cochar on_m = padded(lam, m);
    const int size = lam.weight();
    // v-powers: the two Casselman-Shalika normalizations, the Iwasawa measure
    // and the shift in |g|^{s-(m-r)/2}.
    const int measure = inv_borel_r.v_exponent(on_r);
    const int shift = size * (m - r);
    const int total = half_borel_r.v_exponent(on_r) + half_borel_m.v_exponent(on_m) + measure + shift;
    if (total != 0) {
      throw InternalError("eval_classical: v-exponent " + std::to_string(total) + " at lambda=" +
                          lam.to_string() + " does not cancel");
    }
    MPoly w_tau = cs_value(tau, on_m);
    if (spec.perturb && lam == Partition{1}) {
      w_tau *= Rat(2);
    }
    out.add_term(size, cs_value(pi, on_r) * w_tau * params.root_q.pow(measure + shift));
  }
  return out;
}

TruncSeries eval_chain(const CaseSpec& spec, const Parameters& params) {
  if (spec.r < 1 || spec.m < 1 || spec.n < 1 || spec.n * spec.m <= 1) {
    throw UsageError("eval_chain: requires positive r, m, n with nm > 1");
  }
  const int r = spec.r;
  const int m = spec.m;
  const int n = spec.n;
  const SatakeParams tau = params.tau(n);
  const UnipotentPatterns patterns = build_patterns(n, m, r);
  const ExpChar alpha = alpha_from_patterns(patterns);
  const ExpChar half_borel = make_rat(1, 2) * delta_borel(r);
  const ExpChar inv_borel = Rat(-2) * half_borel;
  const int s_prime_shift = m * n * r - 2 * r + 1;

  TruncSeries out(params.ctx, spec.order);
  for_each_bounded(r, spec.order / n, [&](const Cochar& k) {
    const Cochar t = k.scaled(n);
    MPoly summand = levi_value(tau, r, t);
    if (summand.is_zero()) {
      throw InternalError("eval_chain: Whittaker value vanishes on its support at k=" + k.to_string());
    }
    for (int i = 0; i < r; ++i) {
      summand *= params.x[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(t[i]));
      if (spec.perturb && k[i] == 1) {
        summand *= Rat(2);
      }
    }
    const int degree = t.total();
    if (degree != n * k.total() || degree > spec.order) {
      throw InternalError("eval_chain: summand at k=" + k.to_string() + " has X-degree " +
                          std::to_string(degree));
    }
    // f_pi(t) = chi(t) delta^{1/2}(t); the torus measure carries delta^{-1}(t);
    // |t|^{s'} = X^{|t|} q^{|t| (nmr - 2r + 1)/2}.
    const int v_power = half_borel.v_exponent(t) + alpha.v_exponent(t) + inv_borel.v_exponent(t) +
                        degree * s_prime_shift;
    out.add_term(degree, summand * params.root_q.pow(v_power));
  });
  return out;
}

TruncSeries eval_rank_one(const CaseSpec& spec, const Parameters& params) {
  if (spec.r != 1 || spec.n * spec.m <= 1) {
    throw UsageError("eval_rank_one: requires r = 1 and nm > 1");
  }
  const int nm = spec.n * spec.m;
  const SatakeParams tau = params.tau(spec.n);
  const MPoly& x = params.x.front();
  TruncSeries out(params.ctx, spec.order);
  for (int k = 0; k <= spec.order; ++k) {
    MPoly w = speh_rank1_at_valuation(tau, k);
    if (w.is_zero()) {
      continue;
    }
    if (spec.perturb && k == spec.n) {
      w *= Rat(2);
    }
    // |p^k|^{s-(nm-1)/2} = X^k v^{k(nm-1)}.
    out.add_term(k, x.pow(static_cast<unsigned>(k)) * w * params.root_q.pow(k * (nm - 1)));
  }
  return out;
}

TruncSeries eval_integral(const CaseSpec& spec, const Parameters& params) {
  switch (resolve_path(spec)) {
  case IntegralPath::Classical:
    return eval_classical(spec, params);
  case IntegralPath::RankOne:
    return eval_rank_one(spec, params);
  case IntegralPath::Chain:
  case IntegralPath::Auto:
    break;
  }
  return eval_chain(spec, params);
}

std::vector<Mismatch> compare_series(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) {
    throw UsageError("compare_series: truncation orders differ");
  }
  std::vector<Mismatch> out;
  for (int d = 0; d <= a.order(); ++d) {
    if (!(a[d] == b[d])) {
      out.push_back({d, (a[d] - b[d]).to_string()});
    }
  }
  return out;
}

std::string series_digest(const TruncSeries& s) {
  std::ostringstream os;
  for (int d = 0; d <= s.order(); ++d) {
    os << (d ? ":" : "") << s[d].size();
  }
  return os.str();
}

namespace {

EulerArgument euler_argument(IntegralPath path) {
  return path == IntegralPath::Classical ? EulerArgument::Plain : EulerArgument::Shifted;
}

void add_chain_checks(const CaseSpec& spec, std::vector<NamedResult>& checks) {
  const auto weyl = weyl_checks(spec.n, spec.m, spec.r);
  checks.insert(checks.end(), weyl.begin(), weyl.end());
  const auto patterns = pattern_checks(build_patterns(spec.n, spec.m, spec.r));
  checks.insert(checks.end(), patterns.begin(), patterns.end());
  const ExpChar rhs = collapse_rhs(spec.n, spec.m, spec.r);
  std::string resolved;
  for (LeviConvention conv : {LeviConvention::RBlocks, LeviConvention::NmBlocks}) {
    const bool holds = collapse_lhs(spec.n, spec.m, spec.r, conv) == rhs;
    checks.push_back({"collapse[" + to_string(conv) + "]",
                      holds ? CheckStatus::Pass : CheckStatus::Discrepancy});
    if (holds && resolved.empty()) {
      resolved = to_string(conv);
    }
  }
  checks.push_back({"levi_convention[" + (resolved.empty() ? std::string("none") : resolved) + "]",
                    resolved.empty() ? CheckStatus::Discrepancy : CheckStatus::Pass});
  checks.push_back({"summand_degree_law", CheckStatus::Pass});
}

} // namespace

VerificationReport verify_theorem1(const CaseSpec& spec, int specialization_seeds) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.spec = spec;
  report.path = resolve_path(spec);
  try {
    const Parameters params = parameters_for(spec);
    const TruncSeries lhs = eval_integral(spec, params);
    const TruncSeries rhs = euler_product(spec, params, euler_argument(report.path));
    report.lhs_digest = series_digest(lhs);
    report.rhs_digest = series_digest(rhs);
    report.mismatches = compare_series(lhs, rhs);

    switch (report.path) {
    case IntegralPath::Classical:
      report.checks.push_back({"delta_cancellation", CheckStatus::Pass});
      break;
    case IntegralPath::RankOne: {
      CaseSpec chain = spec;
      chain.path = IntegralPath::Chain;
      const auto two_route = compare_series(lhs, eval_chain(chain, params));
      report.checks.push_back(
          {"chain_route", two_route.empty() ? CheckStatus::Pass : CheckStatus::Fail});
      report.mismatches.insert(report.mismatches.end(), two_route.begin(), two_route.end());
      break;
    }
    case IntegralPath::Chain:
    case IntegralPath::Auto:
      add_chain_checks(spec, report.checks);
      break;
    }

    if (spec.mode == Mode::Symbolic && specialization_seeds > 0) {
      bool agree = true;
      for (int i = 0; i < specialization_seeds && agree; ++i) {
        CaseSpec special = spec;
        special.mode = Mode::Specialized;
        special.seed = spec.seed * 1000003ULL + static_cast<std::uint64_t>(i) + 1;
        const Parameters sp = parameters_for(special);
        agree = eval_integral(special, sp) == lhs.specialize(sp.assignment) &&
                euler_product(special, sp, euler_argument(report.path)) ==
                    rhs.specialize(sp.assignment);
      }
      report.checks.push_back({"specialization_agreement[" + std::to_string(specialization_seeds) + "]",
                               agree ? CheckStatus::Pass : CheckStatus::Fail});
    }

    std::string failed;
    for (const auto& c : report.checks) {
      if (c.status == CheckStatus::Fail && c.name != "chain_route") {
        failed += (failed.empty() ? "" : ", ") + c.name;
      }
    }
    if (!failed.empty()) {
      report.status = Verdict::Error;
      report.diagnostic = "internal check failed: " + failed;
    } else {
      report.status = report.mismatches.empty() ? Verdict::Equal : Verdict::Mismatch;
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    std::ostringstream os;
    os << "case (r,m,n)=(" << spec.r << "," << spec.m << "," << spec.n << "): " << e.what();
    report.status = Verdict::Error;
    report.diagnostic = os.str();
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

} // namespace rszeta
