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

#include "posetdp/io.h"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "posetdp/error.h"
#include "test_util.h"

namespace posetdp {
namespace {

TEST(IoTest, ParsesForkAndClosesRelations) {
  const Poset p = ParsePoset(
      R"({"d": 3, "labels": ["a", "b", "c"], "relations": [[0, 2], [1, 2]]})");
  EXPECT_EQ(p.size(), 3);
  EXPECT_TRUE(p.Leq(0, 2));
  EXPECT_TRUE(p.Leq(1, 2));
  EXPECT_FALSE(p.Comparable(0, 1));
  EXPECT_EQ(p.Label(2), "c");
  const Poset chain = ParsePoset(R"({"d": 3, "relations": [[0, 1], [1, 2]]})");
  EXPECT_TRUE(chain.Leq(0, 2));
}

TEST(IoTest, IgnoresUnknownFields) {
  const Poset p = ParsePoset(
      R"({"d": 2, "relations": [[0, 1]], "provenance": {"source": "x"}})");
  EXPECT_EQ(p, Poset::Chain(2));
}

TEST(IoTest, RejectsBadInput) {
  EXPECT_THROW(ParsePoset(R"({"d": 2, "relations": [[0, 1], [1, 0]]})"),
               CycleError);
  EXPECT_THROW(ParsePoset(R"({"d": 2, "relations": [[0, 2]]})"),
               ValidationError);
  EXPECT_THROW(ParsePoset(R"({"d": 2, "labels": ["x", "x"], "relations": []})"),
               ValidationError);
  EXPECT_THROW(ParsePoset(R"({"relations": []})"), ValidationError);
  EXPECT_THROW(ParsePoset(R"({"d": 2, "relations": [[0]]})"), ValidationError);
  EXPECT_THROW(ParsePoset("not json"), ValidationError);
  EXPECT_THROW(ParsePoset(R"({"d": -1, "relations": []})"), ValidationError);
}

TEST(IoTest, JsonRoundTrip) {
  for (const auto& [name, p] : ::posetdp::testing::SmallCorpus()) {
    EXPECT_EQ(ParsePoset(PosetToJson(p)), p) << name;
  }
  const Poset labelled = Poset::FromRelations(
      3, std::vector<Relation>{{0, 1}, {1, 2}, {0, 2}}, {"x", "y", "z"});
  const std::string text = PosetToJson(labelled);
  EXPECT_EQ(text,
            "{\"d\":3,\"labels\":[\"x\",\"y\",\"z\"],"
            "\"relations\":[[0,1],[1,2]]}\n");
  EXPECT_EQ(ParsePoset(text).labels(), labelled.labels());
}

TEST(IoTest, FileRoundTrip) {
  const auto path =
      std::filesystem::temp_directory_path() / "posetdp_io_test_poset.json";
  const Poset p = ::posetdp::testing::Diamond();
  WritePosetFile(p, path.string());
  EXPECT_EQ(ReadPosetFile(path.string()), p);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadPosetFile(path.string()), ValidationError);
}

TEST(IoTest, RecordsCsv) {
  const auto records =
      ParseRecordsCsv("# comment\nq1,q2\n1,1\n0,1\n\n0,0\n", 2);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0], std::vector<std::uint8_t>({1, 1}));
  EXPECT_EQ(records[2], std::vector<std::uint8_t>({0, 0}));
  EXPECT_EQ(ParseRecordsCsv("1,0\r\n", 2).size(), 1u);
}

TEST(IoTest, RecordsCsvErrorsCarryRow) {
  for (const auto& [text, row] :
       {std::pair<std::string, std::size_t>{"1,1\n1,2\n", 1},
        std::pair<std::string, std::size_t>{"a,b\n1,1\n1\n", 1},
        std::pair<std::string, std::size_t>{"1,1\n0,x\n", 1}}) {
    try {
      ParseRecordsCsv(text, 2);
      ADD_FAILURE() << text;
    } catch (const RecordError& e) {
      EXPECT_EQ(e.index(), row) << text;
    }
  }
}

TEST(IoTest, CountsCsv) {
  const CountVector c = ParseCountsCsv("record_count,a,b\n10,3,4\n", 2);
  EXPECT_EQ(c.record_count, 10);
  EXPECT_EQ(c.counts, std::vector<std::int64_t>({3, 4}));
  EXPECT_THROW(ParseCountsCsv("10,3\n", 2), ValidationError);
  EXPECT_THROW(ParseCountsCsv("10,3,4\n10,3,4\n", 2), ValidationError);
  EXPECT_THROW(ParseCountsCsv("n,a,b\n10,3,x\n", 2), RecordError);
  // A lone non-numeric row is a header, leaving no data.
  EXPECT_THROW(ParseCountsCsv("10,3,x\n", 2), ValidationError);
}

TEST(IoTest, PreambleAndFormatting) {
  EXPECT_EQ(CsvPreamble({{"seed", "7"}, {"policy", "exact-small"}}),
            "# schema_version=1\n# seed=7\n# policy=exact-small\n");
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(2.0), "2");
  EXPECT_EQ(std::stod(FormatDouble(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace posetdp
