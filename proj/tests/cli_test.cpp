// Copyright 2026 The bosonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "bosonkit/matrix.hpp"

namespace bosonkit::cli {
namespace {

using json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string beamsplitter_file() {
  const std::string path = ::testing::TempDir() + "bosonkit_bs.mat";
  std::ofstream file(path);
  write_matrix(file, UnitaryMatrix::beamsplitter().matrix());
  return path;
}

TEST(Cli, AmplitudeHongOuMandel) {
  const auto r = run({"amplitude", "--matrix", beamsplitter_file(), "--in", "1,1", "--out", "1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["probability"].get<double>(), 0.0, 1e-15);
  EXPECT_EQ(j["path"], "permanent");
  for (const char* key : {"re", "im", "modulus", "probability", "path"}) EXPECT_TRUE(j.contains(key));
}

TEST(Cli, AmplitudeContourMatchesPermanent) {
  const std::vector<std::string> base = {"amplitude", "--haar", "3", "--seed", "7",
                                         "--in",      "1,1,1", "--out", "1,1,1"};
  auto contour = base;
  contour.insert(contour.end(), {"--path", "contour"});
  const auto a = run(base);
  const auto b = run(contour);
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  const json ja = json::parse(a.out), jb = json::parse(b.out);
  EXPECT_NEAR(ja["re"].get<double>(), jb["re"].get<double>(), 1e-8);
  EXPECT_NEAR(ja["im"].get<double>(), jb["im"].get<double>(), 1e-8);
  EXPECT_EQ(jb["path"], "contour");
}

TEST(Cli, MissingOutIsUsageError) {
  const auto r = run({"amplitude", "--haar", "2", "--in", "1,1"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("--out"), std::string::npos);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, MissingMatrixSourceIsUsageError) {
  EXPECT_EQ(run({"amplitude", "--in", "1,1", "--out", "1,1"}).code, kUsage);
}

TEST(Cli, BadOccupationIsUsageError) {
  EXPECT_EQ(run({"amplitude", "--haar", "2", "--in", "1,x", "--out", "1,1"}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
}

TEST(Cli, PreconditionViolationNamesBound) {
  const auto r = run({"amplitude", "--haar", "4", "--in", "1,0,0,0", "--out", "0,1,0,0", "--path",
                      "contour"});
  EXPECT_EQ(r.code, kPrecondition);
  EXPECT_NE(r.err.find("M <= 3"), std::string::npos);
  EXPECT_EQ(run({"moments", "--order", "6", "--dim", "31", "--exact"}).code, kPrecondition);
}

TEST(Cli, MomentsExactRational) {
  const auto r = run({"moments", "--order", "6", "--dim", "3", "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["scaled"], "122/3");
  EXPECT_EQ(j["coefficient"], "8784");
  EXPECT_EQ(j["sigma_power"], 9);
}

TEST(Cli, MomentsMonteCarlo) {
  const auto r = run({"moments", "--order", "2", "--dim", "3", "--mc", "20000", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LT(std::abs(j["estimate"].get<double>() - 6.0), 4.0 * j["stderr"].get<double>());
  EXPECT_EQ(run({"moments", "--order", "5", "--dim", "3"}).code, kUsage);
}

TEST(Cli, DistributionSumsToOne) {
  const auto r = run({"distribution", "--matrix", beamsplitter_file(), "--in", "1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["outcomes"].size(), 3u);
  double total = 0.0;
  for (const auto& o : j["outcomes"]) total += o["probability"].get<double>();
  EXPECT_NEAR(total, 1.0, 1e-9);
  EXPECT_EQ(j["outcomes"][0]["occupation"], json({2, 0}));
  EXPECT_EQ(j["outcomes"][2]["occupation"], json({0, 2}));
}

TEST(Cli, DistributionCsv) {
  const auto r =
      run({"distribution", "--matrix", beamsplitter_file(), "--in", "1,1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "occupation,probability");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(Cli, HaarIsByteDeterministic) {
  const auto a = run({"haar", "--dim", "2", "--seed", "1"});
  const auto b = run({"haar", "--dim", "2", "--seed", "1"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"haar", "--dim", "2", "--seed", "2"}).out);
}

TEST(Cli, EveryCommandDeterministicAndRoundTrips) {
  const std::vector<std::vector<std::string>> commands = {
      {"haar", "--dim", "3", "--seed", "4"},
      {"ginibre", "--dim", "2", "--sigma2", "0.3", "--seed", "4"},
      {"quench", "--dim", "3", "--disorder", "0.5", "--seed", "4"},
      {"sample", "--haar", "2", "--in", "2,1", "--count", "20", "--seed", "5"},
      {"shooting", "--haar", "2", "--in", "1,1", "--out", "2,0", "--seed", "6"},
      {"quadrature", "--haar", "2", "--q", "0.5,-1", "--Q", "2,0.25", "--seed", "6"},
      {"coherent", "--haar", "2", "--phi", "0.5:0.1,1", "--psi", "0:1,-0.3:0.2", "--seed", "6"},
      {"moments", "--order", "4", "--dim", "5", "--exact"},
  };
  for (const auto& args : commands) {
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0) << args[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << args[0];
    EXPECT_EQ(json::parse(a.out).dump(2) + '\n', a.out) << args[0];
  }
}

TEST(Cli, ShootingJsonFields) {
  const auto r = run({"shooting", "--matrix", beamsplitter_file(), "--in", "1,1", "--out", "2,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "converged");
  EXPECT_LT(j["residual"].get<double>(), 1e-10);
  EXPECT_EQ(j["theta"].size(), 2u);
  EXPECT_EQ(j["chi"].size(), 2u);
}

TEST(Cli, QuadratureFlatProbability) {
  const auto r = run({"quadrature", "--haar", "2", "--seed", "9", "--q", "1,2", "--Q", "-1,0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["probability"].get<double>(), j["flat_probability"].get<double>(),
              1e-12 * j["flat_probability"].get<double>());
}

TEST(Cli, QuadratureRealMatrixIsPrecondition) {
  const auto r = run({"quadrature", "--matrix", beamsplitter_file(), "--q", "0,0", "--Q", "0,0"});
  EXPECT_EQ(r.code, kPrecondition);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "bosonkit_out.json";
  const auto r = run({"haar", "--dim", "2", "--seed", "1", "--output", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  EXPECT_EQ(content.str(), run({"haar", "--dim", "2", "--seed", "1"}).out);
}

TEST(Cli, ValidateReducedSuitePasses) {
  const auto r = run({"validate", "--dim-max", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["all_passed"].get<bool>());
}

TEST(Cli, ValidateDetectsInjectedFault) {
  const auto r = run({"validate", "--dim-max", "2", "--inject-fault"});
  EXPECT_EQ(r.code, kValidationFailed);
  EXPECT_FALSE(json::parse(r.out)["all_passed"].get<bool>());
}

TEST(Cli, ValidateDefaultSuitePasses) {
  const auto r = run({"validate", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("amplitude"), std::string::npos);
}

}  // namespace
}  // namespace bosonkit::cli
