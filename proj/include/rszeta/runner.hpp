#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rszeta/report.hpp"

namespace rszeta {

enum class Suite { Theorem1, Identities, Structure, All };
Suite parse_suite(const std::string& s);

struct RunOptions {
  Suite suite = Suite::All;
  // Single theorem-1 case (from --r/--m/--n); otherwise the corpus cases run.
  std::optional<CaseSpec> single;
  CorpusFile corpus = default_corpus();
  bool perturb = false;
  int specialization_seeds = 20;
  int identity_rmax = 5;
  int identity_mmax = 5;
  int identity_nmax = 4;
  int weyl_max = 24;
  int pattern_max = 18;
};

std::vector<CaseEntry> theorem1_entries(const std::vector<CaseSpec>& cases, bool perturb,
                                        int specialization_seeds);
// Exponent identities grouped per (r, m, n).
std::vector<CaseEntry> identity_entries(int rmax, int mmax, int nmax);
// Rank-one Whittaker values: agreement with Casselman-Shalika at n = 1
// (m <= 4, k <= 6) and the single-factor generating identity (m, n <= 3, D = 12).
std::vector<CaseEntry> rank_one_oracle_entries();
std::vector<CaseEntry> structure_entries(int weyl_max, int pattern_max);

ReportDocument run_suites(const RunOptions& options);

// 0 iff the report has no MISMATCH and no ERROR entries, else 1.
int exit_code(const ReportDocument& doc);

} // namespace rszeta
