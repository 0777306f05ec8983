// Runs the trop2 binary on the sample inputs in tests/data.

#include "trop2/io.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace trop2;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(TROP2_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const char* name) { return std::string(TROP2_DATA) + "/" + name; }

std::string scratch(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "trop2_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST(Cli, StableWithOracle) {
  auto r = run("stable --f " + data("stable_f.json") + " --g " + data("stable_g.json") + " --oracle");
  ASSERT_EQ(r.status, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["tool"], "trop2");
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_TRUE(j["oracle"]["agreement"].get<bool>());
  EXPECT_TRUE(j["beta_certificate"]["all_nonzero"].get<bool>());
  auto result = stable_result_from_json(j["result"]);
  ASSERT_EQ(result.pieces.size(), 2u);
  std::vector<RationalVector> points;
  for (const auto& p : result.pieces) {
    ASSERT_EQ(p.affine_dim(), 0);
    points.push_back(p.rel_int_point());
  }
  std::sort(points.begin(), points.end());
  EXPECT_EQ(points, (std::vector<RationalVector>{{0, -1}, {1, 0}}));
}

TEST(Cli, StableRejectsNonGenericBeta) {
  // supports of the two inputs give differences whose weight vanishes at beta = 1
  EXPECT_EQ(run("stable --f " + data("stable_f.json") + " --g " + data("stable_g.json") + " --beta 1").status, 2);
  EXPECT_EQ(run("stable --f " + data("stable_f.json") + " --g " + data("stable_g.json") + " --beta 3").status, 0);
}

TEST(Cli, GoldfarbSitSquare) {
  auto r = run("gscube --d 2");
  ASSERT_EQ(r.status, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["vertex_count"], 4);
  EXPECT_TRUE(j["cube_incidence"].get<bool>());
  EXPECT_EQ(run("gscube --d 1").status, 2);
}

TEST(Cli, HypersurfaceSelfcheckAndRoundTrip) {
  auto out = scratch("conic.json");
  auto r = run("hypersurface --input " + data("conic.json") + " --selfcheck --out " + out);
  ASSERT_EQ(r.status, 0);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  auto j = Json::parse(buf.str());
  EXPECT_TRUE(j["selfcheck"]["ok"].get<bool>());
  EXPECT_GT(j["selfcheck"]["grid_points"].get<std::size_t>(), 0u);
  auto dec = decomposition_from_json(j["decomposition"]);
  EXPECT_EQ(to_json(dec).dump(), j["decomposition"].dump());

  // closure accepts the decomposition document back
  auto c = run("closure --input " + out);
  ASSERT_EQ(c.status, 0);
  auto cj = Json::parse(c.out);
  std::size_t maximal = 0;
  for (const auto& p : cj["closure"]) maximal += p["maximal"].get<bool>();
  EXPECT_EQ(maximal, 5u);
}

TEST(Cli, OutputIsByteIdentical) {
  for (const std::string& args : {"hypersurface --input " + data("linear.json"), "cone --polytope --gens " + data("interval.json"),
                                 std::string("check-diagram --selfcheck --seed 4 --count 200"),
                                 "plot --input " + data("cubic.json")}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

TEST(Cli, PlotThreeRays) {
  auto dec = scratch("linear.json");
  ASSERT_EQ(run("hypersurface --input " + data("linear.json") + " --out " + dec).status, 0);
  auto r = run("plot --input " + dec + " --bbox 0,-1,4,3");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
  EXPECT_NE(r.out.find("<circle cx=\"240.00\" cy=\"240.00\""), std::string::npos);
}

TEST(Cli, CheckDiagram) {
  auto r = run("check-diagram --input " + data("gamma.json") + " --sigma 1/2");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(Json::parse(r.out)["diagram"]["holds"].get<bool>());
  auto s = run("check-diagram --selfcheck --count 1000");
  ASSERT_EQ(s.status, 0);
  auto j = Json::parse(s.out)["selfcheck"];
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(j["cancellations"], j["cancellations_flagged"]);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("hypersurface --input /nonexistent.json").status, 2);
  EXPECT_EQ(run("hypersurface --input " + data("gamma.json")).status, 2);  // wrong document
  EXPECT_EQ(run("plot --input " + data("cubic.json") + " --bbox 1,1,0,0").status, 2);
  EXPECT_EQ(run("check-diagram --input " + data("gamma.json") + " --sigma abc").status, 2);
  // 2 u^-1 + 3t - t u loses nothing at sigma = 1/2; a cancellation needs the t-terms to sum to zero
  auto bad = scratch("cancel.json");
  std::ofstream(bad) << R"({"gamma": "u^-1 + t - t*u"})";
  EXPECT_EQ(run("check-diagram --input " + bad + " --sigma 1").status, 3);
}
