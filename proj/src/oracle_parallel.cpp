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

#include <omp.h>

#include <algorithm>
#include <atomic>

#include "oracle_search.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

using oracle_detail::check_cap;

std::vector<RainbowTree> enumerate_rainbow_spanning_trees_parallel(
    const EdgeColoring& coloring, std::size_t cap) {
  check_cap(coloring, cap, "enumeration");
  const std::size_t branches = coloring.m();
  std::vector<std::vector<std::vector<ColoredEdge>>> found(branches);
#pragma omp parallel
  {
    oracle_detail::RainbowEnumerator search(coloring);
#pragma omp for schedule(dynamic)
    for (std::size_t f = 0; f < branches; ++f) {
      search.run_from(f, found[f]);
    }
  }
  std::vector<std::vector<ColoredEdge>> all;
  for (auto& part : found) {
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  return oracle_detail::to_trees(coloring.vertex_count(), std::move(all));
}

std::size_t max_disjoint_rainbow_trees_parallel(const EdgeColoring& coloring,
                                                std::size_t cap) {
  check_cap(coloring, cap, "packing search");
  const auto trees = enumerate_rainbow_spanning_trees_parallel(coloring, cap);
  const auto masks = oracle_detail::edge_masks(trees);
  const std::size_t limit = coloring.m();
  std::atomic<std::size_t> best{0};
  const auto count = static_cast<std::ptrdiff_t>(masks.size());
#pragma omp parallel
  {
    oracle_detail::PackingSearch search(masks, coloring.m());
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t first = 0; first < count; ++first) {
      std::size_t seen = best.load();
      if (seen >= limit) continue;
      const std::size_t got =
          search.best_with(static_cast<std::size_t>(first), seen);
      while (got > seen && !best.compare_exchange_weak(seen, got)) {
      }
    }
  }
  return best.load();
}

}  // namespace rainbow
