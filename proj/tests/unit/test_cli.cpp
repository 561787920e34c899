#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "rszeta/report.hpp"

namespace {

int run(const std::string& args, const std::string& out_file = "/dev/null") {
  const std::string cmd = std::string(RSZETA_VERIFY_EXE) + " " + args + " >" + out_file + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("exit codes") {
  CHECK(run("theorem1 --r 1 --m 2 --n 1 --order 6") == 0);
  CHECK(run("theorem1 --r 3 --m 2 --n 1") == 2);
  CHECK(run("theorem1 --r 1 --m 2") == 2);
  CHECK(run("nonsense") == 2);
  CHECK(run("theorem1 --r 1 --m 2 --n 1 --mode numeric") == 2);
  CHECK(run("theorem1 --r 0 --m 2 --n 1") == 2);
  CHECK(run("theorem1 --bogus") == 2);
  CHECK(run("all --corpus /nonexistent.json") == 2);
  CHECK(run("theorem1 --r 1 --m 2 --n 1 --perturb") == 1);
  CHECK(run("structure") == 0);
  CHECK(run("theorem1 --r 3 --m 2 --n 1 --path chain") == 0);
}

TEST_CASE("single case report") {
  const std::string path = "cli_single_case.json";
  REQUIRE(run("theorem1 --r 1 --m 2 --n 1 --order 6 --format structured --out " + path) == 0);
  rszeta::ReportDocument doc = rszeta::parse_report(slurp(path));
  REQUIRE(doc.cases.size() == 1);
  CHECK(doc.cases[0].status == "EQUAL");
  CHECK(doc.cases[0].order == 6);
  CHECK(doc.summary == rszeta::Summary{1, 0, 0, 0});
  std::remove(path.c_str());
}

TEST_CASE("default corpus") {
  const std::string path = "cli_all.json";
  REQUIRE(run("all --corpus default --format structured --no-timing --out " + path) == 0);
  rszeta::ReportDocument doc = rszeta::parse_report(slurp(path));
  CHECK(doc.summary.equal >= 20);
  CHECK(doc.summary.mismatch == 0);
  CHECK(doc.summary.error == 0);
  const std::string again = "cli_all_again.json";
  REQUIRE(run("all --corpus default --format structured --no-timing --out " + again) == 0);
  CHECK(slurp(path) == slurp(again));
  std::remove(path.c_str());
  std::remove(again.c_str());
}
