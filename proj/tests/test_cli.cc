// Copyright 2026 The psr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "psr/cli.h"
#include "psr/io.h"

namespace psr {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, MeasureSubsetPhaseCoherence) {
  const CliRun r = run({"measure", "--what", "coherence", "--source", "subset-phase", "--n", "6", "--K", "8", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(j["value"].get<double>(), std::log(8.0), 1e-10);
  EXPECT_EQ(j["seed"]["master"].get<std::uint64_t>(), 7u);
}

TEST(Cli, MeasureFromFile) {
  const std::string path = ::testing::TempDir() + "psr_zero_state.json";
  {
    std::ofstream f(path);
    f << R"({"n": 1, "kind": "state", "re": [1, 0], "im": [0, 0]})";
  }
  const CliRun r = run({"measure", "--what", "imaginarity", "--source", "file:" + path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(Json::parse(r.out)["value"].get<double>(), 0.0, 1e-15);
  std::remove(path.c_str());
}

TEST(Cli, MeasureHaarUnitaryMean) {
  const CliRun r = run({"measure", "--what", "unitary-imaginarity", "--source", "haar", "--n", "2", "--samples", "10000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(j["mean"].get<double>(), 0.9, 3.0 * j["standard_error"].get<double>());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"measure", "--what", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(run({"measure", "--what", "coherence", "--n", "99"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"protocol", "--name", "swap-test", "--shots", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"measure", "--what", "imaginarity", "--source", "file:/nonexistent/x.json"}).code, kExitRuntime);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, kExitOk); }

TEST(Cli, FormatsAgree) {
  const std::vector<std::string> base = {"moments", "--n", "2", "--t", "1,2", "--K", "2,4"};
  auto csv_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  const CliRun csv = run(csv_args);
  ASSERT_EQ(csv.code, kExitOk) << csv.err;
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')).find("td") != std::string::npos, true);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 5);
  auto text_args = base;
  text_args.insert(text_args.end(), {"--format", "text"});
  EXPECT_EQ(run(text_args).code, kExitOk);
}

TEST(Cli, Determinism) {
  const std::vector<std::string> args = {"distinguish", "--name", "purity", "--n", "3", "--trials", "20", "--shots", "50", "--seed", "5"};
  const CliRun a = run(args), b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SelftestSubsetPasses) {
  const CliRun r = run({"selftest", "--only", "4,11"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("PASS [ 4]"), std::string::npos);
}

TEST(Cli, SelftestFaultInjectionFails) {
  const CliRun r = run({"selftest", "--only", "4,11", "--inject-fault", "normalization"});
  EXPECT_EQ(r.code, kExitRuntime);
  EXPECT_NE(r.out.find("FAIL [11] Pseudoresource table"), std::string::npos) << r.out;
}

TEST(Cli, SelftestJson) {
  const CliRun r = run({"selftest", "--only", "12", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.out;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_TRUE(j["checks"][0]["passed"].get<bool>());
  EXPECT_FALSE(j["checks"][0].contains("seconds"));
}

}  // namespace
}  // namespace psr
