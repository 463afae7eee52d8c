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

#include <sstream>

#include "json.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/constructor.hpp"
#include "rainbow/error.hpp"
#include "rainbow/trace.hpp"

namespace rainbow {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Trace, OneRecordPerEvent) {
  const BuildResult r = build_forest(permuted_round_robin(23, 1));
  // Base, then k records for each round k = 2..4.
  ASSERT_EQ(r.trace.records.size(), 1u + 2u + 3u + 4u);
  EXPECT_EQ(r.trace.m, 23u);
  EXPECT_EQ(r.trace.records[0].kind, TraceKind::kBase);
  std::size_t pos = 1;
  for (int k = 2; k <= 4; ++k) {
    for (int i = 1; i <= k; ++i, ++pos) {
      const TraceRecord& rec = r.trace.records[pos];
      EXPECT_EQ(rec.k, k);
      EXPECT_EQ(rec.i, i);
      EXPECT_EQ(rec.kind, i < k ? TraceKind::kRevise : TraceKind::kFinalize);
    }
  }
}

TEST(Trace, TenVertexBoundIsTight) {
  const BuildResult r = build_forest(round_robin(5));
  const TraceRecord& rec = r.trace.records[1];
  EXPECT_EQ(rec.bound_lhs, 9u);
  EXPECT_EQ(rec.bound_rhs, 9);
  EXPECT_EQ(rec.elimination_cap, 5);
  EXPECT_EQ(rec.candidates_before.size(), 7u);
}

TEST(Trace, SerializationRoundTrips) {
  for (const char* policy : {"min", "max", "random"}) {
    const BuildResult r =
        build_forest(permuted_round_robin(30, 5), SelectionPolicy::parse(policy, 2));
    const std::string text = serialize_trace(r.trace);
    EXPECT_EQ(lines_of(text).size(), r.trace.records.size());
    const ConstructionTrace back = parse_trace(text);
    EXPECT_EQ(back, r.trace);
    EXPECT_EQ(serialize_trace(back), text);
    for (const std::string& line : lines_of(text)) {
      EXPECT_TRUE(nlohmann::json::accept(line)) << line;
    }
  }
}

TEST(Trace, RevisionRecordLayout) {
  const BuildResult r = build_forest(round_robin(5));
  const auto doc = nlohmann::json::parse(lines_of(serialize_trace(r.trace))[1]);
  EXPECT_EQ(doc["kind"], "revise");
  for (int rule = 2; rule <= 11; ++rule) {
    EXPECT_TRUE(doc["eliminated"].contains("R" + std::to_string(rule)));
  }
  for (const char* key : {"candidates_before", "admissible", "chosen", "w",
                          "v_prime", "w_prime", "bound_lhs", "bound_rhs",
                          "elimination_cap", "root", "r_k", "w_k"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
}

TEST(Trace, ParseErrorsNameTheLine) {
  const std::string good = serialize_trace(build_forest(round_robin(5)).trace);
  std::vector<std::string> lines = lines_of(good);
  lines[2] = "{broken";
  std::string bad;
  for (const auto& l : lines) bad += l + "\n";
  try {
    parse_trace(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos)
        << e.what();
  }
  try {
    parse_trace("{\"kind\": \"revise\"}\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaError);
  }
}

}  // namespace
}  // namespace rainbow
