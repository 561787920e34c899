#include "rszeta/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "json.hpp"
#include "rszeta/errors.hpp"

namespace rszeta {

using nlohmann::json;

namespace {

int get_int(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) {
    return fallback;
  }
  if (!j.at(key).is_number_integer()) {
    throw UsageError(std::string("corpus: field '") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

json case_to_json(const CaseSpec& c) {
  return json{{"r", c.r},           {"m", c.m},       {"n", c.n},
              {"order", c.order},   {"mode", to_string(c.mode)},
              {"seed", c.seed},     {"path", to_string(c.path)}};
}

} // namespace

CorpusFile parse_corpus(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("corpus: invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("cases") || !root.at("cases").is_array()) {
    throw UsageError("corpus: expected an object with a 'cases' array");
  }
  CorpusFile corpus;
  if (root.contains("defaults")) {
    const json& d = root.at("defaults");
    corpus.default_order = get_int(d, "order", corpus.default_order);
    if (d.contains("mode")) {
      corpus.default_mode = parse_mode(d.at("mode").get<std::string>());
    }
  }
  for (const json& jc : root.at("cases")) {
    if (!jc.is_object()) {
      throw UsageError("corpus: every case must be an object");
    }
    for (const char* key : {"r", "m", "n"}) {
      if (!jc.contains(key)) {
        throw UsageError(std::string("corpus: case is missing '") + key + "'");
      }
    }
    CaseSpec c;
    c.r = get_int(jc, "r", 0);
    c.m = get_int(jc, "m", 0);
    c.n = get_int(jc, "n", 0);
    c.order = get_int(jc, "order", corpus.default_order);
    c.mode = jc.contains("mode") ? parse_mode(jc.at("mode").get<std::string>()) : corpus.default_mode;
    c.seed = jc.contains("seed") ? jc.at("seed").get<std::uint64_t>() : 0;
    c.path = jc.contains("path") ? parse_path(jc.at("path").get<std::string>()) : IntegralPath::Auto;
    resolve_path(c);
    corpus.cases.push_back(c);
  }
  return corpus;
}

CorpusFile load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("corpus: cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str());
}

CorpusFile resolve_corpus(const std::string& name_or_path) {
  return name_or_path == "default" ? default_corpus() : load_corpus(name_or_path);
}

CorpusFile default_corpus() {
  CorpusFile corpus;
  auto add = [&](int r, int m, int n, int order, IntegralPath path) {
    CaseSpec c;
    c.r = r;
    c.m = m;
    c.n = n;
    c.order = order;
    c.path = path;
    corpus.cases.push_back(c);
  };
  for (auto [r, m] : {std::pair{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}) {
    add(r, m, 1, 6, IntegralPath::Classical);
  }
  for (auto [r, m, n] : {std::tuple{1, 1, 2}, {1, 2, 2}, {2, 1, 2}, {2, 2, 2}, {1, 1, 3}, {1, 3, 2},
                         {3, 1, 2}}) {
    add(r, m, n, n == 3 ? 9 : 8, IntegralPath::Chain);
  }
  for (auto [m, n] : {std::pair{2, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 3}}) {
    add(1, m, n, 8, IntegralPath::RankOne);
  }
  // Generating-function integral in the linear case, including r >= m.
  add(2, 2, 1, 6, IntegralPath::Chain);
  add(3, 2, 1, 6, IntegralPath::Chain);
  return corpus;
}

std::string corpus_to_json(const CorpusFile& corpus) {
  json cases = json::array();
  for (const CaseSpec& c : corpus.cases) {
    cases.push_back(case_to_json(c));
  }
  json root{{"defaults", {{"order", corpus.default_order}, {"mode", to_string(corpus.default_mode)}}},
            {"cases", cases}};
  return root.dump(2) + "\n";
}

std::string corpus_digest(const CorpusFile& corpus) { return sha256_hex(corpus_to_json(corpus)); }

CaseEntry to_entry(const VerificationReport& report) {
  CaseEntry e;
  e.r = report.spec.r;
  e.m = report.spec.m;
  e.n = report.spec.n;
  e.order = report.spec.order;
  e.mode = to_string(report.spec.mode);
  e.path = to_string(report.path);
  e.status = to_string(report.status);
  e.mismatches = report.mismatches;
  for (const auto& c : report.checks) {
    e.intermediate_checks.push_back({c.name, to_string(c.status)});
  }
  e.millis = static_cast<long>(report.elapsed.count());
  e.diagnostic = report.diagnostic;
  return e;
}

void ReportDocument::tally() {
  summary = Summary{};
  for (const CaseEntry& c : cases) {
    switch (parse_verdict(c.status)) {
    case Verdict::Equal:
      ++summary.equal;
      break;
    case Verdict::Mismatch:
      ++summary.mismatch;
      break;
    case Verdict::PaperDiscrepancy:
      ++summary.paper_discrepancy;
      break;
    case Verdict::Error:
      ++summary.error;
      break;
    }
  }
}

ReportFormat parse_format(const std::string& s) {
  if (s == "text") {
    return ReportFormat::Text;
  }
  if (s == "structured") {
    return ReportFormat::Structured;
  }
  throw UsageError("unknown format '" + s + "' (expected text|structured)");
}

namespace {

json entry_to_json(const CaseEntry& c, const EmitOptions& options) {
  json mismatches = json::array();
  for (const Mismatch& mm : c.mismatches) {
    mismatches.push_back({{"degree", mm.degree}, {"diff", mm.diff}});
  }
  json checks = json::array();
  for (const CheckEntry& ch : c.intermediate_checks) {
    checks.push_back({{"name", ch.name}, {"status", ch.status}});
  }
  json j{{"r", c.r},
         {"m", c.m},
         {"n", c.n},
         {"order", c.order},
         {"mode", c.mode},
         {"path", c.path},
         {"status", c.status},
         {"mismatches", mismatches},
         {"intermediate_checks", checks},
         {"millis", options.include_timing ? c.millis : 0L}};
  if (!c.diagnostic.empty()) {
    j["diagnostic"] = c.diagnostic;
  }
  return j;
}

std::string emit_text(const ReportDocument& doc, const EmitOptions& options) {
  std::ostringstream os;
  os << "rszeta " << doc.version << "  corpus " << doc.corpus_digest.substr(0, 16) << "\n";
  for (const CaseEntry& c : doc.cases) {
    os << '[' << c.status << "] " << c.path << " r=" << c.r << " m=" << c.m << " n=" << c.n;
    if (c.order > 0) {
      os << " D=" << c.order << ' ' << c.mode;
    }
    if (options.include_timing) {
      os << " (" << c.millis << " ms)";
    }
    os << "\n";
    for (const CheckEntry& ch : c.intermediate_checks) {
      if (ch.status != "PASS") {
        os << "    " << ch.status << ' ' << ch.name << "\n";
      }
    }
    for (const Mismatch& mm : c.mismatches) {
      os << "    ";
      if (mm.degree >= 0) {
        os << "X^" << mm.degree << ": ";
      }
      os << mm.diff << "\n";
    }
    if (!c.diagnostic.empty()) {
      os << "    error: " << c.diagnostic << "\n";
    }
  }
  os << "summary: equal=" << doc.summary.equal << " mismatch=" << doc.summary.mismatch
     << " paper_discrepancy=" << doc.summary.paper_discrepancy << " error=" << doc.summary.error
     << "\n";
  return os.str();
}

} // namespace

std::string emit_report(const ReportDocument& doc, ReportFormat format, EmitOptions options) {
  if (format == ReportFormat::Text) {
    return emit_text(doc, options);
  }
  json cases = json::array();
  for (const CaseEntry& c : doc.cases) {
    cases.push_back(entry_to_json(c, options));
  }
  json root{{"version", doc.version},
            {"corpus_digest", doc.corpus_digest},
            {"cases", cases},
            {"summary",
             {{"equal", doc.summary.equal},
              {"mismatch", doc.summary.mismatch},
              {"paper_discrepancy", doc.summary.paper_discrepancy},
              {"error", doc.summary.error}}}};
  return root.dump(2) + "\n";
}

ReportDocument parse_report(std::string_view structured) {
  try {
    const json root = json::parse(structured);
    ReportDocument doc;
    doc.version = root.at("version").get<std::string>();
    doc.corpus_digest = root.at("corpus_digest").get<std::string>();
    for (const json& jc : root.at("cases")) {
      CaseEntry c;
      c.r = jc.at("r").get<int>();
      c.m = jc.at("m").get<int>();
      c.n = jc.at("n").get<int>();
      c.order = jc.at("order").get<int>();
      c.mode = jc.at("mode").get<std::string>();
      c.path = jc.at("path").get<std::string>();
      c.status = jc.at("status").get<std::string>();
      for (const json& mm : jc.at("mismatches")) {
        c.mismatches.push_back({mm.at("degree").get<int>(), mm.at("diff").get<std::string>()});
      }
      for (const json& ch : jc.at("intermediate_checks")) {
        c.intermediate_checks.push_back({ch.at("name").get<std::string>(), ch.at("status").get<std::string>()});
      }
      c.millis = jc.at("millis").get<long>();
      c.diagnostic = jc.value("diagnostic", std::string());
      doc.cases.push_back(std::move(c));
    }
    const json& s = root.at("summary");
    doc.summary = Summary{s.at("equal").get<int>(), s.at("mismatch").get<int>(),
                          s.at("paper_discrepancy").get<int>(), s.at("error").get<int>()};
    return doc;
  } catch (const json::exception& e) {
    throw UsageError(std::string("report: malformed structured report: ") + e.what());
  }
}

} // namespace rszeta
