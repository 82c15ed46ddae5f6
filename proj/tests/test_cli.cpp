#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "poincare_cli.hpp"

using namespace poincare;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, ShowAlmostComplexRow) {
  const auto doc = run_json({"show", "almost-complex", "--n", "4", "--kmax", "6"});
  const auto& row = doc["tables"][0]["rows"][0];
  const std::vector<std::string> want{"0", "16", "272", "1320", "4392", "11840", "27744"};
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(row["k=" + std::to_string(k)]["num"], want[static_cast<std::size_t>(k)]);
    EXPECT_EQ(row["k=" + std::to_string(k)]["den"], "1");
  }
  EXPECT_EQ(doc["schema"], "poincare-output");
  EXPECT_EQ(doc["version"], 1);
}

TEST(Cli, ShowPOnlyEntryUsesSeries) {
  const auto doc = run_json({"show", "hamiltonian-critical", "--n", "2", "--kmax", "4"});
  EXPECT_EQ(doc["tables"][2]["rows"][0]["sigma"]["num"], "1");
  EXPECT_EQ(doc["tables"][2]["rows"][0]["sigma"]["den"], "4");
  EXPECT_EQ(doc["tables"][2]["rows"][0]["source"], "P(z) only");
}

TEST(Cli, ShowAliasAndParams) {
  const Result r = run({"show", "takens-bogdanov", "--kmax", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Result p = run({"show", "poincare-dulac", "--params", "case=2,m=3", "--kmax", "3"});
  EXPECT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(run({"show", "poincare-dulac", "--params", "case=two"}).code, 2);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--id", "fedosov", "--nmax", "4", "--kmax", "50"}).code, 0);
  const Result r = run({"verify", "--id", "nonexistent"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown-entry"), std::string::npos);
}

TEST(Cli, VerifyAllWithJobsIsDeterministic) {
  const Result a = run({"--format", "csv", "verify", "--nmax", "4", "--kmax", "30"});
  const Result b = run({"--format", "csv", "--jobs", "4", "verify", "--nmax", "4", "--kmax", "30"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, AnalyzeNonPR) {
  const auto doc = run_json({"analyze", "--expr", "1/(1-z^2)^3"});
  std::map<std::string, nlohmann::ordered_json> f;
  for (const auto& row : doc["tables"][0]["rows"]) f[row["field"]] = row["value"];
  EXPECT_EQ(f["d"]["num"], "3");
  EXPECT_EQ(f["sigma"]["num"], "1");
  EXPECT_EQ(f["sigma"]["den"], "8");
  EXPECT_EQ(f["conforms_to_PR"], false);
}

TEST(Cli, AnalyzeParseErrorIsUsageError) {
  const Result r = run({"analyze", "--expr", "(z"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parse-error"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"show"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "list"}).code, 2);
  const Result r = run({"list", "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ValidityErrors) {
  EXPECT_EQ(run({"show", "riemannian", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"rederive", "--id", "einstein", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"metric2d", "--kmax", "5"}).code, 2);
}

TEST(Cli, ListFormats) {
  const Result md = run({"list"});
  EXPECT_EQ(md.code, 0);
  EXPECT_NE(md.out.find("| riemannian |"), std::string::npos);
  const Result csv = run({"--format", "csv", "list"});
  EXPECT_NE(csv.out.find("# catalog\nid,title,group"), std::string::npos);
  const auto doc = run_json({"list"});
  EXPECT_EQ(doc["tables"][0]["rows"].size(), 22u);
}

TEST(Cli, EnvironmentSelectsDefaultFormat) {
  ::setenv("POINCARE_FORMAT", "csv", 1);
  const Result r = run({"list"});
  ::unsetenv("POINCARE_FORMAT");
  EXPECT_EQ(r.out.rfind("# catalog", 0), 0u);
  const Result m = run({"list"});
  EXPECT_EQ(m.out.rfind("## catalog", 0), 0u);
}

TEST(Cli, MarkdownAndJsonCarryTheSameValues) {
  const Result md = run({"show", "riemannian", "--n", "3", "--kmax", "5"});
  const auto doc = run_json({"show", "riemannian", "--n", "3", "--kmax", "5"});
  std::string row = "| riemannian n=3 |";
  for (int k = 0; k <= 5; ++k) {
    const auto& c = doc["tables"][0]["rows"][0]["k=" + std::to_string(k)];
    row += " " + c["num"].get<std::string>() + " |";
  }
  EXPECT_NE(md.out.find(row), std::string::npos) << row;
}

TEST(Cli, RederiveAndMetric2d) {
  const Result r = run({"rederive", "--id", "fedosov", "--n", "1", "--kmax", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| 2 | 5 | 5 | true |"), std::string::npos);
  const Result m = run({"metric2d", "--kmax", "4"});
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("| 4 | 3 | 3 | true |"), std::string::npos);
}

TEST(Cli, StrataDemoReportsTheSigma5Disagreement) {
  const Result a = run({"strata-demo", "--seed", "1"});
  const Result b = run({"strata-demo", "--seed", "1", "--jobs", "3"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, 1);
  EXPECT_NE(a.out.find("| Sigma5 | 0 | 1 | 1 | 0 | 2 | 2 | 2 | 2 |"), std::string::npos);
  EXPECT_NE(a.out.find("| t - s^2/t | false | false |"), std::string::npos);
}

TEST(Cli, ScenarioFile) {
  const std::string path = ::testing::TempDir() + "poincare_scenario.json";
  {
    std::ofstream f(path);
    f << R"({"schema":"poincare-scenario","version":1,"name":"line","base":["x"],"fiber":["u"],
            "generators":[{"name":"d/dx","components":{"x":"1"}},{"name":"d/du","components":{"u":"1"}}],
            "strata":[{"label":"all"}],
            "invariants":[{"name":"u1","stratum":"all","expr":"u_1"},
                          {"name":"u","stratum":"all","expr":"u","expect":false}]})";
  }
  const Result r = run({"scenario", path, "--kmax", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("| all | 0 | 1 | 1 | 1 |"), std::string::npos) << r.out;
  std::remove(path.c_str());
  EXPECT_EQ(run({"scenario", path}).code, 2);
}

TEST(Cli, ShippedScenarioFilesMatchBuiltins) {
  const std::pair<const char*, const char*> files[] = {{"lie_example.json", jet::kLieExampleJson},
                                                       {"metric2d.json", jet::kMetric2dJson},
                                                       {"distribution.json", jet::kDistributionJson}};
  for (const auto& [name, builtin] : files) {
    std::ifstream in(std::string(POINCARE_SOURCE_DIR) + "/scenarios/" + name);
    ASSERT_TRUE(in) << name;
    EXPECT_EQ(nlohmann::json::parse(in), nlohmann::json::parse(builtin)) << name;
  }
}
