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

#include "rainbow/batch.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "rainbow/coloring.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow {
namespace {

std::optional<std::size_t> min_admissible(const ConstructionTrace& trace) {
  std::optional<std::size_t> out;
  for (const TraceRecord& rec : trace.records) {
    if (rec.kind != TraceKind::kRevise) continue;
    out = std::min(out.value_or(rec.admissible.size()), rec.admissible.size());
  }
  return out;
}

std::vector<std::pair<std::size_t, std::uint64_t>> instances(
    const BatchConfig& config) {
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  for (std::size_t m = config.m_from; m <= config.m_to; ++m) {
    for (std::size_t r = 0; r < config.reps; ++r) {
      out.emplace_back(m, config.seed_base + r);
    }
  }
  return out;
}

}  // namespace

BatchRow run_instance(std::size_t m, std::uint64_t seed,
                      const SelectionPolicy& policy) {
  BatchRow row;
  row.m = m;
  row.seed = seed;
  row.omega = omega(m);
  const EdgeColoring coloring = permuted_round_robin(m, seed);
  const auto start = std::chrono::steady_clock::now();
  try {
    const BuildResult result = build_forest(coloring, policy, true);
    row.build_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    row.trees_built = result.forest.trees.size();
    row.verify_pass =
        verify_all(coloring, result.forest, &result.trace).pass;
    row.min_candidate_slack = min_admissible(result.trace);
  } catch (const ConstructionFailure& failure) {
    row.build_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    row.min_candidate_slack = min_admissible(failure.trace());
  }
  return row;
}

std::vector<BatchRow> run_batch(const BatchConfig& config) {
  std::vector<BatchRow> rows;
  for (const auto& [m, seed] : instances(config)) {
    rows.push_back(run_instance(m, seed, config.policy));
  }
  return rows;
}

std::vector<BatchRow> run_batch_parallel(const BatchConfig& config) {
  const auto todo = instances(config);
  std::vector<BatchRow> rows(todo.size());
  const auto count = static_cast<std::ptrdiff_t>(todo.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    const auto& [m, seed] = todo[static_cast<std::size_t>(t)];
    rows[static_cast<std::size_t>(t)] = run_instance(m, seed, config.policy);
  }
  return rows;
}

std::string batch_csv(const std::vector<BatchRow>& rows) {
  std::ostringstream os;
  os << "m,omega,trees_built,build_micros,verify_pass,min_candidate_slack\n";
  for (const BatchRow& row : rows) {
    os << row.m << ',' << row.omega << ',' << row.trees_built << ','
       << row.build_micros << ',' << (row.verify_pass ? "true" : "false")
       << ',';
    if (row.min_candidate_slack) os << *row.min_candidate_slack;
    os << '\n';
  }
  return os.str();
}

}  // namespace rainbow
