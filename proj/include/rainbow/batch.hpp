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

#ifndef RAINBOW_BATCH_HPP_
#define RAINBOW_BATCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/constructor.hpp"

namespace rainbow {

// Instance (m, rep) is permuted_round_robin(m, seed_base + rep).
struct BatchConfig {
  std::size_t m_from = 1;
  std::size_t m_to = 40;
  std::size_t reps = 3;
  std::uint64_t seed_base = 0;
  SelectionPolicy policy;
};

struct BatchRow {
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::size_t omega = 0;
  std::size_t trees_built = 0;
  std::int64_t build_micros = 0;
  bool verify_pass = false;
  // Smallest admissible candidate set seen while building; empty when the
  // construction made no revisions (omega = 1) or failed early.
  std::optional<std::size_t> min_candidate_slack;
};

BatchRow run_instance(std::size_t m, std::uint64_t seed,
                      const SelectionPolicy& policy);

// Rows ordered by (m, rep) in both versions.
std::vector<BatchRow> run_batch(const BatchConfig& config);
std::vector<BatchRow> run_batch_parallel(const BatchConfig& config);

// Header m,omega,trees_built,build_micros,verify_pass,min_candidate_slack.
std::string batch_csv(const std::vector<BatchRow>& rows);

}  // namespace rainbow

#endif  // RAINBOW_BATCH_HPP_
