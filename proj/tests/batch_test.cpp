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

#include <algorithm>

#include "rainbow/batch.hpp"

namespace rainbow {
namespace {

TEST(Batch, RowsCoverTheGridAndPass) {
  BatchConfig config;
  config.m_from = 1;
  config.m_to = 14;
  config.reps = 2;
  const auto rows = run_batch(config);
  ASSERT_EQ(rows.size(), 28u);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    EXPECT_EQ(rows[j].m, 1 + j / 2);
    EXPECT_EQ(rows[j].seed, j % 2);
    EXPECT_EQ(rows[j].trees_built, omega(rows[j].m));
    EXPECT_TRUE(rows[j].verify_pass);
    EXPECT_EQ(rows[j].min_candidate_slack.has_value(), rows[j].m >= 5);
  }
}

TEST(Batch, ParallelMatchesSerialApartFromTiming) {
  BatchConfig config;
  config.m_from = 3;
  config.m_to = 25;
  config.reps = 2;
  config.policy = SelectionPolicy::parse("random", 4);
  auto serial = run_batch(config);
  auto parallel = run_batch_parallel(config);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t j = 0; j < serial.size(); ++j) {
    EXPECT_EQ(serial[j].m, parallel[j].m);
    EXPECT_EQ(serial[j].seed, parallel[j].seed);
    EXPECT_EQ(serial[j].trees_built, parallel[j].trees_built);
    EXPECT_EQ(serial[j].verify_pass, parallel[j].verify_pass);
    EXPECT_EQ(serial[j].min_candidate_slack, parallel[j].min_candidate_slack);
  }
}

TEST(Batch, CsvLayout) {
  BatchRow row;
  row.m = 5;
  row.omega = 2;
  row.trees_built = 2;
  row.build_micros = 17;
  row.verify_pass = true;
  row.min_candidate_slack = 4;
  BatchRow small;
  small.m = 2;
  small.omega = 1;
  small.trees_built = 1;
  small.verify_pass = true;
  EXPECT_EQ(batch_csv({row, small}),
            "m,omega,trees_built,build_micros,verify_pass,min_candidate_slack\n"
            "5,2,2,17,true,4\n"
            "2,1,1,0,true,\n");
}

}  // namespace
}  // namespace rainbow
