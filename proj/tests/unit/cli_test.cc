// Copyright 2026 The posetdp Authors
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace posetdp::cli {
namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("posetdp_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  int Call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return ::posetdp::cli::Run(args, out_, err_);
  }

  std::filesystem::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

int CountPrefixed(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}

TEST_F(CliTest, EnumerateChainOfTwo) {
  const auto poset = Write("chain2.json", R"({"d": 2, "relations": [[0, 1]]})");
  EXPECT_EQ(Call({"enumerate", "--poset", poset}), kExitOk) << err_.str();
  EXPECT_EQ(CountPrefixed(out_.str(), "A:"), 4);
  EXPECT_NE(out_.str().find("total: 4"), std::string::npos);
}

TEST_F(CliTest, NonMonotoneCountsFail) {
  const auto poset = Write("chain2.json", R"({"d": 2, "relations": [[0, 1]]})");
  const auto counts = Write("bad.csv", "record_count,q0,q1\n10,5,3\n");
  EXPECT_EQ(Call({"mechanism", "--poset", poset, "--counts", counts}),
            kExitValidation);
  EXPECT_NE(err_.str().find("index 0"), std::string::npos) << err_.str();
}

TEST_F(CliTest, InvalidRecordReportsRow) {
  const auto poset = Write("chain2.json", R"({"d": 2, "relations": [[0, 1]]})");
  const auto records = Write("records.csv", "1,1\n0,1\n1,0\n");
  EXPECT_EQ(Call({"mechanism", "--poset", poset, "--records", records}),
            kExitValidation);
  EXPECT_NE(err_.str().find("index 2"), std::string::npos) << err_.str();
}

TEST_F(CliTest, MechanismEchoesConfig) {
  const auto poset = Write("chain2.json", R"({"d": 2, "relations": [[0, 1]]})");
  const auto counts = Write("ok.csv", "10,3,5\n");
  ASSERT_EQ(Call({"--seed", "5", "mechanism", "--poset", poset, "--counts",
                  counts, "--epsilon", "0.5"}),
            kExitOk)
      << err_.str();
  const std::string first = out_.str();
  EXPECT_NE(first.find("\"poset_hash\""), std::string::npos);
  EXPECT_NE(first.find("\"schema_version\""), std::string::npos);
  EXPECT_NE(first.find("\"seed\""), std::string::npos);
  ASSERT_EQ(Call({"--seed", "5", "mechanism", "--poset", poset, "--counts",
                  counts, "--epsilon", "0.5"}),
            kExitOk);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(CliTest, VerifySimplexIsByteIdentical) {
  ASSERT_EQ(Call({"verify", "--suite", "simplex", "--seed", "7"}), kExitOk)
      << err_.str();
  const std::string first = out_.str();
  ASSERT_EQ(Call({"verify", "--suite", "simplex", "--seed", "7"}), kExitOk);
  EXPECT_EQ(out_.str(), first);
  EXPECT_FALSE(first.empty());
}

TEST_F(CliTest, UnknownSubcommandFails) {
  EXPECT_EQ(Call({"frobnicate"}), kExitValidation);
  EXPECT_EQ(Call({}), kExitValidation);
}

TEST_F(CliTest, MissingFileAndCycleFail) {
  EXPECT_EQ(Call({"enumerate", "--poset", (dir_ / "none.json").string()}),
            kExitValidation);
  const auto cyc =
      Write("cycle.json", R"({"d": 2, "relations": [[0, 1], [1, 0]]})");
  EXPECT_EQ(Call({"enumerate", "--poset", cyc}), kExitValidation);
}

TEST_F(CliTest, EnumerateCapExceeded) {
  std::string rel;
  for (int i = 0; i + 1 < 14; ++i) {
    rel += (i ? "," : "") + std::string("[") + std::to_string(i) + "," +
           std::to_string(i + 1) + "]";
  }
  const auto big = Write("big.json", "{\"d\": 14, \"relations\": [" + rel + "]}");
  EXPECT_EQ(Call({"enumerate", "--poset", big}), kExitValidation);
}

TEST_F(CliTest, SampleWritesCsvWithProvenance) {
  const auto poset = Write("fork.json",
                           R"({"d": 3, "labels": ["a", "b", "c"],
                               "relations": [[0, 2], [1, 2]]})");
  const auto out = (dir_ / "samples.csv").string();
  ASSERT_EQ(Call({"--seed", "3", "--out", out, "sample", "--poset", poset,
                  "--n", "5"}),
            kExitOk)
      << err_.str();
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str().rfind("# schema_version=1", 0), 0u);
  EXPECT_NE(text.str().find("# poset_hash="), std::string::npos);
  EXPECT_EQ(CountPrefixed(text.str(), "#"), CountPrefixed(text.str(), "# "));
  int data = 0;
  std::istringstream lines(text.str());
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line[0] != '#') ++data;
  }
  EXPECT_EQ(data, 6);  // header plus five samples
}

TEST_F(CliTest, RandPosetRoundTrips) {
  const auto out = (dir_ / "r.json").string();
  ASSERT_EQ(Call({"--seed", "4", "--out", out, "randposet", "--d", "6",
                  "--steps", "2000"}),
            kExitOk)
      << err_.str();
  EXPECT_EQ(Call({"enumerate", "--poset", out}), kExitOk) << err_.str();
}

TEST_F(CliTest, TriangulateAndExperiments) {
  const auto poset = Write("chain2.json", R"({"d": 2, "relations": [[0, 1]]})");
  ASSERT_EQ(Call({"triangulate", "--poset", poset}), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("schema_version"), std::string::npos);
  ASSERT_EQ(Call({"experiment", "lp-curve", "--d-min", "2", "--d-max", "3"}),
            kExitOk)
      << err_.str();
  EXPECT_NE(out_.str().find("d,p,scaled_expected"), std::string::npos);
  ASSERT_EQ(Call({"--trials", "200", "experiment", "nhis", "--sections", "1"}),
            kExitOk)
      << err_.str();
  EXPECT_NE(out_.str().find("sections,d,ratio,trials"), std::string::npos);
}

}  // namespace
}  // namespace posetdp::cli
