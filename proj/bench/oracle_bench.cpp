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

#include <benchmark/benchmark.h>

#include "rainbow/batch.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/constructor.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/verifier.hpp"

namespace {

using namespace rainbow;

void BM_EnumerateSerial(benchmark::State& state) {
  const EdgeColoring c = permuted_round_robin(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_rainbow_spanning_trees(c));
  }
}
BENCHMARK(BM_EnumerateSerial)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  const EdgeColoring c = permuted_round_robin(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_rainbow_spanning_trees_parallel(c));
  }
}
BENCHMARK(BM_EnumerateParallel)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PackingSerial(benchmark::State& state) {
  const EdgeColoring c = permuted_round_robin(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(max_disjoint_rainbow_trees(c));
}
BENCHMARK(BM_PackingSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PackingParallel(benchmark::State& state) {
  const EdgeColoring c = permuted_round_robin(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_disjoint_rainbow_trees_parallel(c));
  }
}
BENCHMARK(BM_PackingParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuildForest(benchmark::State& state) {
  const EdgeColoring c = permuted_round_robin(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_forest(c, {}, false));
}
BENCHMARK(BM_BuildForest)->Arg(5)->Arg(40)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_VerifyAll(benchmark::State& state) {
  const EdgeColoring c = permuted_round_robin(state.range(0), 1);
  const BuildResult r = build_forest(c);
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(c, r.forest, &r.trace));
}
BENCHMARK(BM_VerifyAll)->Arg(5)->Arg(40)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_BatchSerial(benchmark::State& state) {
  BatchConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(run_batch(config));
}
BENCHMARK(BM_BatchSerial)->Unit(benchmark::kMillisecond);

void BM_BatchParallel(benchmark::State& state) {
  BatchConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(run_batch_parallel(config));
}
BENCHMARK(BM_BatchParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
