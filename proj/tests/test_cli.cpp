#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rackregen/cli.hpp"
#include "support.hpp"

namespace rackregen {
namespace {

using testing::config_path;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("rackregen_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

TEST(Cli, CurveKneesCsv) {
  auto r = invoke({"curve", "--config", config_path("fig7_rack.json"), "--model", "rack",
                   "--format", "csv"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0],
            "knee_index,L_i,beta_e,beta_e_dec,alpha,alpha_dec,gamma_1,gamma_1_dec,gamma_2,"
            "gamma_2_dec,cost_1,cost_1_dec,cost_2,cost_2_dec");
  const char* betas[] = {"1/40", "1/58", "1/72", "1/82", "1/88", "1/92", "1/94"};
  for (int i = 0; i < 7; ++i) {
    EXPECT_EQ(rows[i + 1].rfind(std::to_string(i) + ",", 0), 0u);
    EXPECT_NE(rows[i + 1].find(std::string(",") + betas[i] + ","), std::string::npos);
  }
}

TEST(Cli, SegmentsTable) {
  auto r = invoke({"curve", "--config", config_path("example2.json"), "--table", "segments"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "segment_index,i,L_i,g_i,beta_lo,beta_hi,alpha_lo,alpha_hi");
  EXPECT_EQ(rows[1], "0,0,3,0,1/9,inf,1/3,1/3");
  EXPECT_EQ(rows[2], "1,2,5,6,1/11,1/9,5/11,1/3");
}

TEST(Cli, JsonCarriesTheSameValuesAsCsv) {
  auto csv = invoke({"curve", "--config", config_path("fig7_rack.json")});
  auto js = invoke({"curve", "--config", config_path("fig7_rack.json"), "--format", "json"});
  ASSERT_EQ(js.status, kExitOk);
  auto doc = nlohmann::json::parse(js.out);
  auto rows = lines(csv.out);
  ASSERT_EQ(doc["knees"].size() + 1, rows.size());
  for (size_t i = 0; i < doc["knees"].size(); ++i) {
    const auto& knee = doc["knees"][i];
    std::string beta = knee["beta_e"];
    std::string alpha = knee["alpha"];
    EXPECT_NE(rows[i + 1].find("," + beta + ","), std::string::npos);
    EXPECT_NE(rows[i + 1].find("," + alpha + ","), std::string::npos);
    EXPECT_EQ(knee["beta_e_dec"].get<double>(), std::stod(to_decimal(parse_rational(beta))));
  }
  EXPECT_EQ(doc["config"]["k"], 10);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"curve", "--config", config_path("three_rack.json")},
           {"compare", "--config", config_path("fig7_rack.json"), "--models", "rack,static,basic"},
           {"verify", "--config", config_path("example1.json"), "--samples", "5"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

TEST(Cli, SweepEmitsOneBlockPerTau) {
  auto r = invoke({"sweep", "--config", config_path("fig8.json"), "--model", "rack", "--tau",
                   "1,6/5,2,10", "--format", "csv"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1u + 10 + 9 + 7 + 10);
  EXPECT_EQ(rows[0].substr(0, 20), "tau,tau_dec,knee_ind");
  EXPECT_EQ(rows[11].substr(0, 15), "6/5,1.2,0,12/5,");
  EXPECT_NE(rows.back().find(",1/326,"), std::string::npos);
}

TEST(Cli, PointsAndCompare) {
  auto p = invoke({"points", "--config", config_path("trimmed_mbr.json")});
  ASSERT_EQ(p.status, kExitOk);
  auto rows = lines(p.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2].substr(0, 12), "mbr,1/19,0.0");

  auto c = invoke({"compare", "--config", config_path("fig7_rack.json"), "--models",
                   "rack,static"});
  ASSERT_EQ(c.status, kExitOk) << c.err;
  auto crow = lines(c.out);
  EXPECT_EQ(crow[0], "model,i,L_i,beta_e,beta_e_dec,alpha,alpha_dec,exposed");
  EXPECT_EQ(crow.size(), 1u + 10 + 10);
}

TEST(Cli, VerifyExitCodes) {
  auto ok = invoke({"verify", "--config", config_path("short_repair.json"), "--samples", "50",
                    "--seed", "7", "--mode", "exhaustive"});
  EXPECT_EQ(ok.status, kExitOk) << ok.out;
  EXPECT_NE(ok.out.find("mismatches: 0\n"), std::string::npos);

  // The threshold overshoots the flow graph at the MSR knee here.
  auto knee = invoke({"verify", "--config", config_path("example2.json"), "--samples", "50",
                      "--seed", "7", "--mode", "exhaustive"});
  EXPECT_EQ(knee.status, kExitMismatch);

  auto bad = invoke({"verify", "--config", config_path("short_repair.json"), "--samples", "5",
                     "--inflate-coeff", "0"});
  EXPECT_EQ(bad.status, kExitMismatch);
  EXPECT_EQ(bad.out.find("mismatches: 0\n"), std::string::npos);

  auto js = invoke({"verify", "--config", config_path("short_repair.json"), "--samples", "3",
                    "--format", "json"});
  ASSERT_EQ(js.status, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(js.out)["mismatches"], 0);

  auto guard = invoke({"verify", "--config", config_path("fig7_rack.json"), "--mode",
                       "exhaustive"});
  EXPECT_EQ(guard.status, kExitConfig);
}

TEST(Cli, ConfigErrorsExitTwo) {
  auto missing = invoke({"curve", "--config", "/nonexistent.json"});
  EXPECT_EQ(missing.status, kExitConfig);
  EXPECT_NE(missing.err.find("cannot read"), std::string::npos);

  auto path = temp_file("bad.json", R"({"file_size": "1", "k": 4, "d": 4, "tau": "2",
      "cheap_cost": "1", "expensive_cost": "1",
      "racks": [{"nodes": 3, "cheap_degree": 3}, {"nodes": 3, "cheap_degree": 2}]})");
  auto invalid = invoke({"curve", "--config", path});
  EXPECT_EQ(invalid.status, kExitConfig);
  EXPECT_NE(invalid.err.find("cheap_degree 3 exceeds nodes-1 = 2"), std::string::npos);

  auto tau = invoke({"sweep", "--config", config_path("fig8.json"), "--tau", "1,x"});
  EXPECT_EQ(tau.status, kExitConfig);
}

TEST(Cli, UsageErrorsExitSixtyFour) {
  EXPECT_EQ(invoke({}).status, kExitUsage);
  EXPECT_EQ(invoke({"draw"}).status, kExitUsage);
  EXPECT_EQ(invoke({"curve"}).status, kExitUsage);
  EXPECT_EQ(invoke({"curve", "--config", "x", "--format", "xml"}).status, kExitUsage);
  EXPECT_EQ(invoke({"curve", "--config", "x", "--model", "fancy"}).status, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--config", "x", "--samples", "many"}).status, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).status, kExitOk);
}

TEST(Cli, WritesToOutFile) {
  auto path = (std::filesystem::temp_directory_path() / "rackregen_test_out.csv").string();
  std::filesystem::remove(path);
  auto r = invoke({"curve", "--config", config_path("example1.json"), "--out", path});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), invoke({"curve", "--config", config_path("example1.json")}).out);
}

}  // namespace
}  // namespace rackregen
