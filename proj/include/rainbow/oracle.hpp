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

#ifndef RAINBOW_ORACLE_HPP_
#define RAINBOW_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/forest.hpp"

namespace rainbow {

inline constexpr std::size_t kEnumerateVertexCap = 10;
inline constexpr std::size_t kPackingVertexCap = 8;

// Every rainbow spanning tree of the coloring, rooted at vertex 0, sorted
// by their edge lists. Throws kInstanceTooLarge when 2m > cap.
std::vector<RainbowTree> enumerate_rainbow_spanning_trees(
    const EdgeColoring& coloring, std::size_t cap = kEnumerateVertexCap);

// Size of the largest pairwise edge-disjoint family of rainbow spanning
// trees. Throws kInstanceTooLarge when 2m > cap.
std::size_t max_disjoint_rainbow_trees(const EdgeColoring& coloring,
                                       std::size_t cap = kPackingVertexCap);

// OpenMP versions; same results as the serial ones.
std::vector<RainbowTree> enumerate_rainbow_spanning_trees_parallel(
    const EdgeColoring& coloring, std::size_t cap = kEnumerateVertexCap);
std::size_t max_disjoint_rainbow_trees_parallel(
    const EdgeColoring& coloring, std::size_t cap = kPackingVertexCap);

}  // namespace rainbow

#endif  // RAINBOW_ORACLE_HPP_
