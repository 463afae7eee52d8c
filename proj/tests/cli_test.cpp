// Copyright 2026 The Rainbow Forest Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rainbow/cli.hpp"

namespace rainbow {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rainbow_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return dispatch(args, out_, err_);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, GenBuildVerifyPipeline) {
  ASSERT_EQ(run({"gen", "--m", "5", "--scheme", "round-robin", "-o", path("c.json")}), 0);
  ASSERT_EQ(run({"build", "-i", path("c.json"), "-o", path("f.json"), "--trace",
                 path("t.jsonl"), "--dot", path("f.dot")}),
            0)
      << err_.str();
  EXPECT_EQ(run({"verify", "-i", path("c.json"), "-f", path("f.json"), "-t",
                 path("t.jsonl")}),
            0)
      << out_.str();
  const auto report = nlohmann::json::parse(out_.str());
  EXPECT_EQ(report["pass"], true);
  EXPECT_NE(slurp(path("f.dot")).find("graph T2"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({"gen", "--m", "0"}), 2);
  EXPECT_EQ(run({"gen"}), 2);
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
  EXPECT_EQ(run({"gen", "--m", "3", "--scheme", "latin"}), 2);
  EXPECT_EQ(run({"build", "-i", path("missing.json")}), 2);
  EXPECT_NE(err_.str().find("cannot read"), std::string::npos);
  EXPECT_EQ(run({"gen", "--m", "3", "-o", path("c.json")}), 0);
  EXPECT_EQ(run({"build", "-i", path("c.json"), "--policy", "best"}), 2);
  EXPECT_EQ(run({"bench", "--m-from", "5", "--m-to", "4"}), 2);
  std::ofstream(path("odd.json")) << R"({"n": 5, "edges": []})";
  EXPECT_EQ(run({"build", "-i", path("odd.json")}), 2);
  EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(CliTest, VerifyRejectsDeletedEdge) {
  ASSERT_EQ(run({"gen", "--m", "6", "--permute-seed", "3", "-o", path("c.json")}), 0);
  ASSERT_EQ(run({"build", "-i", path("c.json"), "-o", path("f.json")}), 0);
  auto doc = nlohmann::ordered_json::parse(slurp(path("f.json")));
  doc["trees"][0]["edges"].erase(0);
  std::ofstream(path("bad.json")) << doc.dump();
  EXPECT_EQ(run({"verify", "-i", path("c.json"), "-f", path("bad.json")}), 1);
  EXPECT_EQ(nlohmann::json::parse(out_.str())["pass"], false);
}

TEST_F(CliTest, OutputsAreByteIdenticalAcrossRuns) {
  for (int rep = 0; rep < 2; ++rep) {
    const std::string tag = std::to_string(rep);
    ASSERT_EQ(run({"gen", "--m", "24", "--permute-seed", "9", "-o", path("c" + tag)}), 0);
    ASSERT_EQ(run({"build", "-i", path("c" + tag), "-o", path("f" + tag), "--policy",
                   "random", "--seed", "5", "--trace", path("t" + tag)}),
              0);
  }
  for (const char* stem : {"c", "f", "t"}) {
    EXPECT_EQ(slurp(path(std::string(stem) + "0")), slurp(path(std::string(stem) + "1")))
        << stem;
    EXPECT_FALSE(slurp(path(std::string(stem) + "0")).empty());
  }
}

TEST_F(CliTest, GenWritesToStdoutWithoutOutputPath) {
  ASSERT_EQ(run({"gen", "--m", "2"}), 0);
  const auto doc = nlohmann::json::parse(out_.str());
  EXPECT_EQ(doc["n"], 4);
  EXPECT_EQ(doc["edges"].size(), 6u);
}

TEST_F(CliTest, OracleReportsCountsAndCap) {
  ASSERT_EQ(run({"gen", "--m", "2", "-o", path("c2.json")}), 0);
  ASSERT_EQ(run({"oracle", "-i", path("c2.json")}), 0);
  EXPECT_EQ(out_.str(), "{\"count\":4,\"max_disjoint\":1}\n");
  ASSERT_EQ(run({"gen", "--m", "5", "-o", path("c5.json")}), 0);
  EXPECT_EQ(run({"oracle", "-i", path("c5.json")}), 2);
  EXPECT_NE(err_.str().find("InstanceTooLarge"), std::string::npos) << err_.str();
}

TEST_F(CliTest, BenchWritesCsv) {
  ASSERT_EQ(run({"bench", "--m-from", "4", "--m-to", "6", "--reps", "2", "--csv",
                 path("b.csv")}),
            0);
  std::istringstream in(slurp(path("b.csv")));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "m,omega,trees_built,build_micros,verify_pass,min_candidate_slack");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_NE(line.find(",true,"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 6);
}

}  // namespace
}  // namespace rainbow
