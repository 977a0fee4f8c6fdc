#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "rrc/commands.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rrc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rrc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rrc_test_" + name);
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"a1"}).code, 2);
  EXPECT_EQ(run({"--precision", "8", "a1", "5"}).code, 2);
  EXPECT_EQ(run({"--parallel", "maybe", "verify-modeq"}).code, 2);
  EXPECT_EQ(run({"series", "eta"}).code, 2);
  EXPECT_EQ(run({"eta-check", "N=20; 3:1"}).code, 2);
  EXPECT_EQ(run({"congruence", "--target", "q"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, A1WorkedExample) {
  const auto r = run({"a1", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("A_1(5) = 6"), std::string::npos);
  EXPECT_NE(r.out.find("R_1(5) = 4"), std::string::npos);
  EXPECT_NE(r.out.find("R_2(5) = 1"), std::string::npos);
}

TEST(Cli, VerifyRelations) {
  const auto path = temp_path("relations.json");
  const auto r = run({"--precision", "20", "--json", path.string(), "verify-relations"});
  EXPECT_EQ(r.code, 0) << r.out;
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["checks"].size(), 21u);
  EXPECT_EQ(j["parameters"]["window"], 20);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_FALSE(j.contains("elapsed_ms"));
}

TEST(Cli, CorruptedRelationTableExitsOne) {
  std::ifstream in(RRC_RELATIONS_FILE);
  auto j = nlohmann::json::parse(in);
  j["relations"][6]["rhs"]["const_poly"][0][1] = "1";
  const auto path = temp_path("bad_relations.json");
  std::ofstream(path) << j.dump();
  const auto r = run({"--precision", "20", "verify-relations", "--relations", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[FAIL] Group II #2"), std::string::npos) << r.out;
}

TEST(Cli, MissingRelationFileIsAnError) {
  EXPECT_NE(run({"verify-relations", "--relations", "/nonexistent/table.json"}).code, 0);
}

TEST(Cli, Congruence) {
  auto r = run({"congruence", "--target", "a1", "--n", "1", "--count", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("A_1(24) = 0 mod 5^1"), std::string::npos);
  EXPECT_NE(r.out.find("5/5 checks"), std::string::npos);
  r = run({"congruence", "--target", "a1", "--n", "2", "--count", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("A_1(599)"), std::string::npos);
  EXPECT_EQ(run({"congruence", "--target", "p", "--n", "2", "--count", "3"}).code, 0);
}

TEST(Cli, EtaCheck) {
  const auto r = run({"--json", "-", "eta-check", "N=20; 1:0 2:-2 4:4 5:0 10:2 20:-4"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  EXPECT_EQ(j["data"]["newman"]["weighted_sum"], -48);
  std::vector<std::string> orders;
  for (const auto& o : j["data"]["orders"]) orders.push_back(o["order"]);
  EXPECT_EQ(orders, (std::vector<std::string>{"-2", "0", "0", "2", "0", "0"}));
  // A quotient that fails Newman still runs but exits 1.
  EXPECT_EQ(run({"eta-check", "N=20; 1:1 2:-1"}).code, 1);
}

TEST(Cli, VerifyModeqAndSeries) {
  EXPECT_EQ(run({"--precision", "40", "verify-modeq"}).code, 0);
  const auto r = run({"--precision", "16", "series", "p1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p1 = 13*q + 90*q^2"), std::string::npos);
}

TEST(Cli, Skeleton) {
  const auto r = run({"--precision", "20", "skeleton", "--n-max", "4"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, Theorem8AndDump) {
  const auto dir = temp_path("certs");
  std::filesystem::remove_all(dir);
  const auto r = run({"theorem8", "--n-max", "1", "--window", "30", "--random", "2", "--dump-certificates",
                      dir.string()});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(std::filesystem::exists(dir / "L_1.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "L_2.json"));
}

TEST(Cli, JsonIsDeterministic) {
  const auto a = run({"--json", "-", "--precision", "30", "verify-relations"});
  const auto b = run({"--json", "-", "--precision", "30", "--parallel", "true", "verify-relations"});
  const auto c = run({"--json", "-", "--precision", "30", "verify-relations"});
  EXPECT_EQ(a.out, c.out);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(run({"--json", "-", "--timing", "a1", "3"}).out.find("elapsed_ms"), std::string::npos);
}

TEST(Cli, EnvironmentDefaultPrecision) {
  setenv("RRC_PRECISION", "33", 1);
  EXPECT_EQ(rrc::cli::default_precision(), 33);
  const auto r = run({"--json", "-", "verify-modeq"});
  EXPECT_NE(r.out.find("\"precision\": 33"), std::string::npos);
  setenv("RRC_PRECISION", "junk", 1);
  EXPECT_EQ(rrc::cli::default_precision(), 250);
  unsetenv("RRC_PRECISION");
}
