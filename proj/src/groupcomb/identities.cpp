#include "rszeta/identities.hpp"

#include <algorithm>

#include "rszeta/errors.hpp"

namespace rszeta {

std::string to_string(LeviConvention c) {
  return c == LeviConvention::RBlocks ? "r-blocks" : "nm-blocks";
}

std::string to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Pass:
    return "PASS";
  case CheckStatus::Fail:
    return "FAIL";
  case CheckStatus::Discrepancy:
    return "PAPER_DISCREPANCY";
  }
  return "FAIL";
}

Cochar conjugated_torus(int n, int m, int r, const Cochar& t) {
  if (t.size() != r) {
    throw UsageError("conjugated_torus: expected " + std::to_string(r) + " valuations");
  }
  return conj_cochar(build_w0(n, m, r), embed_leading(t, n * m * r));
}

ExpChar alpha_closed_form(int n, int m, int r) {
  ExpChar out(r);
  for (int i = 0; i < r; ++i) {
    out[i] = -Rat(i * (n * m - 2));
  }
  return out;
}

ExpChar alpha_from_patterns(const UnipotentPatterns& p) {
  const ExpChar jac = conj_measure_factor(p.rest);
  return pullback(jac, p.r, [&](const Cochar& t) { return conjugated_torus(p.n, p.m, p.r, t); });
}

ExpChar levi_twist_ambient(int n, int m, int r, LeviConvention convention) {
  const int nm = n * m;
  const std::vector<int> blocks = convention == LeviConvention::RBlocks
                                      ? std::vector<int>(static_cast<std::size_t>(r), nm)
                                      : std::vector<int>(static_cast<std::size_t>(nm), r);
  return make_rat(nm - 1, 2 * nm) * delta_parabolic(blocks);
}

ExpChar levi_twist(int n, int m, int r, LeviConvention convention) {
  return pullback(levi_twist_ambient(n, m, r, convention), r,
                  [&](const Cochar& t) { return conjugated_torus(n, m, r, t); });
}

ExpChar collapse_lhs(int n, int m, int r, LeviConvention convention) {
  const UnipotentPatterns p = build_patterns(n, m, r);
  const ExpChar on_a =
      alpha_from_patterns(p) + levi_twist(n, m, r, convention) - make_rat(1, 2) * delta_borel(r);
  return pullback(on_a, r, [n](const Cochar& k) { return k.scaled(n); });
}

ExpChar collapse_rhs(int n, int m, int r) {
  ExpChar out(r);
  for (int i = 0; i < r; ++i) {
    out[i] = -make_rat(n * (n * m - 2) * (r - 1), 2);
  }
  return out;
}

ExpChar scalar_torus_lhs(int n, int r, int sign) {
  const int size = n * r;
  const ExpChar on_gl = abs_det_power(size, r, make_rat(-(n - 1), 2 * n)) +
                        make_rat(1, 2) * delta_parabolic(std::vector<int>(static_cast<std::size_t>(n), r));
  return pullback(on_gl, 1, [&](const Cochar& c) {
    Cochar out = Cochar::zero(size);
    for (int i = 0; i < r; ++i) {
      out.vals[static_cast<std::size_t>(i)] = sign * c[0];
    }
    return out;
  });
}

ExpChar scalar_torus_displayed(int n, int r, int sign) {
  // |t|^e contributes q^{-e} per unit valuation of t.
  const Rat e = sign * (make_rat(-r * (n - 1), 2 * n) + make_rat(r * r * (n - 1), 2));
  return ExpChar(std::vector<Rat>{-e});
}

CheckStatus IdentityCheck::status() const {
  if (holds()) {
    return CheckStatus::Pass;
  }
  return kind == CheckKind::Display ? CheckStatus::Discrepancy : CheckStatus::Fail;
}

std::vector<IdentityCheck> check_exponent_identities(int rmax, int mmax, int nmax) {
  if (rmax < 1 || mmax < 1 || nmax < 1) {
    throw UsageError("check_exponent_identities: bounds must be positive");
  }
  std::vector<IdentityCheck> out;
  for (int r = 1; r <= rmax; ++r) {
    for (int m = 1; m <= mmax; ++m) {
      for (int n = 1; n <= nmax; ++n) {
        if (n * m > 1) {
          for (LeviConvention conv : {LeviConvention::RBlocks, LeviConvention::NmBlocks}) {
            out.push_back(IdentityCheck{"collapse[" + to_string(conv) + "]", r, m, n,
                                        CheckKind::Display, collapse_rhs(n, m, r),
                                        collapse_lhs(n, m, r, conv)});
          }
        }
        out.push_back(IdentityCheck{"scalar-torus[t]", r, m, n, CheckKind::Display,
                                    scalar_torus_displayed(n, r, 1), scalar_torus_lhs(n, r, 1)});
        out.push_back(IdentityCheck{"scalar-torus[1/t]", r, m, n, CheckKind::Display,
                                    scalar_torus_displayed(n, r, -1), scalar_torus_lhs(n, r, -1)});
      }
    }
  }
  return out;
}

bool StructureCase::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const NamedResult& c) { return c.status == CheckStatus::Pass; });
}

namespace {
CheckStatus build_status(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }
CheckStatus display_status(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Discrepancy; }
} // namespace

std::vector<NamedResult> weyl_checks(int n, int m, int r) {
  std::vector<NamedResult> out;
  const int nm = n * m;
  const int size = nm * r;
  bool bijective = true;
  try {
    (void)build_w0(n, m, r);
  } catch (const StructureError&) {
    bijective = false;
  }
  out.push_back({"w0_bijective", build_status(bijective)});
  if (!bijective) {
    return out;
  }
  // Conjugation is linear in t, so checking basis vectors checks the law.
  bool interleaves = true;
  for (int i = 0; i < r; ++i) {
    const Cochar image = conjugated_torus(n, m, r, Cochar::basis(r, i));
    interleaves = interleaves && image == Cochar::basis(size, i * nm);
  }
  out.push_back({"w0_interleaves_t0", build_status(interleaves)});
  const PermMat wj = build_wJ(n, m, r);
  out.push_back({"wJ_involution", build_status(wj * wj == PermMat::identity(size))});
  return out;
}

std::vector<NamedResult> pattern_checks(const UnipotentPatterns& p) {
  std::vector<NamedResult> out;
  const auto& conj = p.conj_trimmed;
  bool partition = conj.size() == p.trimmed.size() && p.diag.size() + p.rest.size() == conj.size();
  for (const auto& c : p.diag.coords()) {
    partition = partition && conj.contains(c) && !p.rest.contains(c);
  }
  for (const auto& c : p.rest.coords()) {
    partition = partition && conj.contains(c);
  }
  out.push_back({"u2_u3_partition", build_status(partition)});
  out.push_back({"character_transport",
                 build_status(conj.charsupp() == p.diag.charsupp() && p.rest.charsupp().empty())});
  out.push_back({"u3_block_constraints", display_status(rest_matches_block_constraints(p))});
  if (p.n * p.m > 1) {
    out.push_back({"alpha_closed_form",
                   display_status(alpha_from_patterns(p) == alpha_closed_form(p.n, p.m, p.r))});
  }
  return out;
}

std::vector<StructureCase> check_structure(int max_weyl, int max_patterns) {
  std::vector<StructureCase> out;
  for (int n = 1; n <= max_weyl; ++n) {
    for (int m = 1; n * m <= max_weyl; ++m) {
      for (int r = 1; n * m * r <= max_weyl; ++r) {
        StructureCase sc{n, m, r, weyl_checks(n, m, r)};
        if (n * m * r <= max_patterns) {
          auto more = pattern_checks(build_patterns(n, m, r));
          sc.checks.insert(sc.checks.end(), more.begin(), more.end());
        }
        out.push_back(std::move(sc));
      }
    }
  }
  return out;
}

} // namespace rszeta
