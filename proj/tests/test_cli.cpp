#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fgrverify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = fgr::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fgrverify_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("reduce") {
  const Result r = run({"reduce", "r3"});
  CHECK(r.code == fgr::cli::kExitOk);
  CHECK(r.out == "sqrt2*p1 - r1 + s1\n");
  CHECK(run({"reduce", "b1", "--stage", "derived_eliminated"}).out == "-p1 + 2*p3\n");
  const Result bad = run({"reduce", "z9"});
  CHECK(bad.code == fgr::cli::kExitUsage);
  CHECK(bad.err.find("unknown family") != std::string::npos);
  CHECK(run({"reduce", "p1", "--stage", "nope"}).code == fgr::cli::kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == fgr::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == fgr::cli::kExitUsage);
  CHECK(run({"--tol", "-1", "constants"}).code == fgr::cli::kExitUsage);
  const Result narrow = run({"--truncation", "10", "verify", "gamma_151"});
  CHECK(narrow.code == fgr::cli::kExitUsage);
  CHECK(narrow.err.find("invalid configuration") != std::string::npos);
  CHECK(run({"verify", "nonexistent"}).code == fgr::cli::kExitUsage);
  CHECK(run({"--help"}).code == fgr::cli::kExitOk);
}

TEST_CASE("verify all, then summarize the saved report") {
  const auto path = temp_path("report.json");
  const Result r = run({"--json", path.string(), "--parallel", "verify", "all"});
  CHECK(r.code == fgr::cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);

  std::ifstream f(path);
  REQUIRE(f);
  const nlohmann::json report = nlohmann::json::parse(f);
  CHECK(report["passed"].get<bool>());
  CHECK(report["claims"].size() >= 25);
  for (const auto& c : report["claims"]) CHECK(c["passed"].get<bool>());

  const Result summary = run({"report", path.string()});
  CHECK(summary.code == fgr::cli::kExitOk);
  CHECK(summary.out.find(std::to_string(report["claims"].size()) + "/" + std::to_string(report["claims"].size())) !=
        std::string::npos);
  CHECK(summary.out.find("Gamma = 1/2*sqrt2*p1") != std::string::npos);

  std::ifstream again(path);
  const std::string text((std::istreambuf_iterator<char>(again)), std::istreambuf_iterator<char>());
  CHECK(run({"--format", "json", "report", path.string()}).out == text);
  std::filesystem::remove(path);
}

TEST_CASE("single claim") {
  const Result r = run({"verify", "gamma_151"});
  CHECK(r.code == fgr::cli::kExitOk);
  CHECK(r.out.rfind("PASS gamma_151", 0) == 0);
}

TEST_CASE("constants") {
  const Result r = run({"constants"});
  CHECK(r.code == fgr::cli::kExitOk);
  CHECK(r.out.find("Gamma         = 1/2*sqrt2*p1") != std::string::npos);
  CHECK(r.out.find("0.8853") != std::string::npos);
  CHECK(r.out.find("1.2520") != std::string::npos);
  CHECK(r.out.find("c0") != std::string::npos);
}

TEST_CASE("eval") {
  const Result r = run({"--format", "json", "eval", "p3"});
  CHECK(r.code == fgr::cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"].get<double>() == doctest::Approx(1.252040331252147).epsilon(1e-12));
  CHECK(j["core"] == "p1");
  const auto s = nlohmann::json::parse(run({"--format", "json", "eval", "sqrt2*log2"}).out);
  CHECK(s["value"].get<double>() == doctest::Approx(0.9802581434685472));
}

TEST_CASE("environment overrides") {
  ::setenv("FGR_FORMAT", "json", 1);
  const Result j = run({"reduce", "p3"});
  CHECK(nlohmann::json::parse(j.out)["result"]["terms"].size() == 1);
  // A flag wins over the environment.
  CHECK(run({"--format", "text", "reduce", "p3"}).out == "p1\n");
  ::unsetenv("FGR_FORMAT");

  ::setenv("FGR_TRUNCATION", "10", 1);
  CHECK(run({"verify", "gamma_151"}).code == fgr::cli::kExitUsage);
  ::unsetenv("FGR_TRUNCATION");
  CHECK(run({"verify", "gamma_151"}).code == fgr::cli::kExitOk);
}

TEST_CASE("custom fixture file") {
  const auto path = temp_path("fixtures.json");
  {
    std::ofstream f(path);
    f << R"({"format":"fgr-fixtures","version":1,"fixtures":[)"
         R"({"id":"typo","stage":"core","expected":"2*p1","input":"p3"}]})";
  }
  const Result r = run({"--fixtures", path.string(), "verify", "all"});
  CHECK(r.code == fgr::cli::kExitFailed);
  CHECK(r.out.find("failed: typo") != std::string::npos);
  std::filesystem::remove(path);
}
