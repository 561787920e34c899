// verify <suite> [options]: batch checks with a CI-friendly exit code.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rszeta/errors.hpp"
#include "rszeta/runner.hpp"

namespace {

constexpr int kUsageExit = 2;

int run(int argc, char** argv) {
  CLI::App app{"Exact verification of Rankin-Selberg zeta identities", "verify"};
  app.set_version_flag("--version", std::string(rszeta::kEngineVersion));

  std::string suite;
  std::optional<int> r;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<int> order;
  std::optional<std::string> mode;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> path;
  std::string corpus = "default";
  std::string format = "text";
  std::string out;
  bool perturb = false;
  bool no_timing = false;
  int seeds = 20;

  app.add_option("suite", suite, "theorem1 | identities | structure | all")
      ->required()
      ->check(CLI::IsMember({"theorem1", "identities", "structure", "all"}));
  app.add_option("--r", r, "rank of pi")->check(CLI::PositiveNumber);
  app.add_option("--m", m, "rank of tau")->check(CLI::PositiveNumber);
  app.add_option("--n", n, "cover degree")->check(CLI::PositiveNumber);
  app.add_option("--order", order, "truncation order in q^{-s}")->check(CLI::NonNegativeNumber);
  app.add_option("--mode", mode, "symbolic | specialized")
      ->check(CLI::IsMember({"symbolic", "specialized"}));
  app.add_option("--seed", seed, "specialization seed");
  app.add_option("--path", path, "auto | classical | rank1 | chain")
      ->check(CLI::IsMember({"auto", "classical", "rank1", "chain"}));
  app.add_option("--corpus", corpus, "corpus file, or 'default'");
  app.add_option("--format", format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--seeds", seeds, "specializations per symbolic case")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--perturb", perturb, "corrupt one oracle value per case");
  app.add_flag("--no-timing", no_timing, "write every millis field as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  rszeta::RunOptions options;
  try {
    options.suite = rszeta::parse_suite(suite);
    options.corpus = rszeta::resolve_corpus(corpus);
    options.perturb = perturb;
    options.specialization_seeds = seeds;

    const bool any_case_flag = r || m || n;
    if (any_case_flag) {
      if (!(r && m && n)) {
        throw rszeta::UsageError("--r, --m and --n must be given together");
      }
      if (options.suite != rszeta::Suite::Theorem1) {
        throw rszeta::UsageError("--r/--m/--n select a theorem1 case");
      }
      rszeta::CaseSpec spec;
      spec.r = *r;
      spec.m = *m;
      spec.n = *n;
      spec.order = order.value_or(options.corpus.default_order);
      spec.mode = mode ? rszeta::parse_mode(*mode) : options.corpus.default_mode;
      spec.seed = seed.value_or(0);
      spec.path = path ? rszeta::parse_path(*path) : rszeta::IntegralPath::Auto;
      rszeta::resolve_path(spec);
      options.single = spec;
    } else if (order || mode || seed || path) {
      // Overrides apply to every corpus case.
      for (auto& c : options.corpus.cases) {
        if (order) {
          c.order = *order;
        }
        if (mode) {
          c.mode = rszeta::parse_mode(*mode);
        }
        if (seed) {
          c.seed = *seed;
        }
        if (path) {
          c.path = rszeta::parse_path(*path);
        }
        rszeta::resolve_path(c);
      }
    }
  } catch (const rszeta::UsageError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kUsageExit;
  }

  rszeta::ReportDocument doc;
  try {
    doc = rszeta::run_suites(options);
  } catch (const rszeta::UsageError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kUsageExit;
  }

  const std::string text = rszeta::emit_report(doc, rszeta::parse_format(format),
                                               rszeta::EmitOptions{!no_timing});
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "verify: cannot write " << out << "\n";
      return 1;
    }
    file << text;
  }

  for (const auto& c : doc.cases) {
    if (!c.diagnostic.empty()) {
      std::cerr << "verify: " << c.diagnostic << "\n";
    }
  }
  if (doc.summary.paper_discrepancy > 0) {
    std::cerr << "verify: warning: " << doc.summary.paper_discrepancy
              << " PAPER_DISCREPANCY entries\n";
  }
  return rszeta::exit_code(doc);
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "verify: internal error: " << e.what() << "\n";
    return 1;
  }
}
