#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rszeta/zeta.hpp"

namespace rszeta {

inline constexpr std::string_view kEngineVersion = "0.1.0";

// Batch input: theorem-1 cases plus defaults applied to fields a case omits.
struct CorpusFile {
  int default_order = 6;
  Mode default_mode = Mode::Symbolic;
  std::vector<CaseSpec> cases;

  bool operator==(const CorpusFile&) const = default;
};

// Parses the JSON corpus format
//   {"defaults": {"order": 6, "mode": "symbolic"},
//    "cases": [{"r": 1, "m": 2, "n": 1, "order": 6, "mode": "...", "seed": 0, "path": "auto"}]}
// and validates every case; throws UsageError on any problem.
CorpusFile parse_corpus(std::string_view text);
CorpusFile load_corpus(const std::string& path);
// "default" names the built-in corpus; anything else is a file path.
CorpusFile resolve_corpus(const std::string& name_or_path);
CorpusFile default_corpus();
// Canonical JSON (every field explicit, keys sorted).
std::string corpus_to_json(const CorpusFile& corpus);
// SHA-256 hex of corpus_to_json.
std::string corpus_digest(const CorpusFile& corpus);

struct CheckEntry {
  std::string name;
  std::string status;
  bool operator==(const CheckEntry&) const = default;
};

// One row of the report. Theorem-1 rows carry a series comparison; rows of the
// identity and structure suites use path "identities", "rank1-oracle" or
// "structure", and a mismatch there with degree -1 records a failed check
// together with its computed correction.
struct CaseEntry {
  int r = 0;
  int m = 0;
  int n = 0;
  int order = 0;
  std::string mode = "symbolic";
  std::string path;
  std::string status;
  std::vector<Mismatch> mismatches;
  std::vector<CheckEntry> intermediate_checks;
  long millis = 0;
  std::string diagnostic;

  bool operator==(const CaseEntry&) const = default;
};

CaseEntry to_entry(const VerificationReport& report);

struct Summary {
  int equal = 0;
  int mismatch = 0;
  int paper_discrepancy = 0;
  int error = 0;
  bool operator==(const Summary&) const = default;
};

struct ReportDocument {
  std::string version = std::string(kEngineVersion);
  std::string corpus_digest;
  std::vector<CaseEntry> cases;
  Summary summary;

  // Recomputes summary from the entries.
  void tally();
  bool operator==(const ReportDocument&) const = default;
};

enum class ReportFormat { Text, Structured };
ReportFormat parse_format(const std::string& s);

struct EmitOptions {
  // When false, every millis field is written as 0 so identical inputs give
  // byte-identical output.
  bool include_timing = true;
};

std::string emit_report(const ReportDocument& doc, ReportFormat format, EmitOptions options = {});
// Inverse of the structured format; throws UsageError on malformed input.
ReportDocument parse_report(std::string_view structured);

} // namespace rszeta
