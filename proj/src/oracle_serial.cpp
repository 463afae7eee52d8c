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

#include <algorithm>

#include "oracle_search.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

using oracle_detail::check_cap;

std::vector<RainbowTree> enumerate_rainbow_spanning_trees(
    const EdgeColoring& coloring, std::size_t cap) {
  check_cap(coloring, cap, "enumeration");
  oracle_detail::RainbowEnumerator search(coloring);
  std::vector<std::vector<ColoredEdge>> found;
  for (std::size_t f = 0; f < search.first_class_size(); ++f) {
    search.run_from(f, found);
  }
  return oracle_detail::to_trees(coloring.vertex_count(), std::move(found));
}

std::size_t max_disjoint_rainbow_trees(const EdgeColoring& coloring,
                                       std::size_t cap) {
  check_cap(coloring, cap, "packing search");
  const auto trees = enumerate_rainbow_spanning_trees(coloring, cap);
  const auto masks = oracle_detail::edge_masks(trees);
  oracle_detail::PackingSearch search(masks, coloring.m());
  std::size_t best = 0;
  for (std::size_t first = 0; first < masks.size() && best < search.limit();
       ++first) {
    best = std::max(best, search.best_with(first, best));
  }
  return best;
}

}  // namespace rainbow
