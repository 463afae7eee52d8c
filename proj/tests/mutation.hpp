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

#ifndef RAINBOW_TESTS_MUTATION_HPP_
#define RAINBOW_TESTS_MUTATION_HPP_

// Single-point corruptions of a forest for mutation testing.

#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/rng.hpp"

namespace rainbow::testing {

enum class MutationKind { kColor, kEdgeRecolored, kEdgeKeepColor, kRoot };

inline const char* mutation_name(MutationKind kind) {
  switch (kind) {
    case MutationKind::kColor:
      return "single-color";
    case MutationKind::kEdgeRecolored:
      return "single-edge (coloring color)";
    case MutationKind::kEdgeKeepColor:
      return "single-edge (stale color)";
    case MutationKind::kRoot:
      return "single-root";
  }
  return "?";
}

// Returns a copy of `forest` that differs in exactly one place. Never
// returns the forest unchanged.
inline Forest mutate(const EdgeColoring& coloring, const Forest& forest,
                     MutationKind kind, Rng& rng) {
  const std::size_t n = coloring.vertex_count();
  const std::size_t colors = coloring.color_count();
  Forest out = forest;
  const std::size_t t = rng.below(forest.trees.size());
  const RainbowTree& tree = forest.trees[t];
  std::vector<ColoredEdge> edges(tree.edges().begin(), tree.edges().end());
  const std::size_t at = rng.below(edges.size());
  Vertex root = tree.root();

  switch (kind) {
    case MutationKind::kColor: {
      const std::uint32_t shift = 1 + static_cast<std::uint32_t>(rng.below(colors - 1));
      edges[at].color = Color(
          static_cast<std::uint32_t>((edges[at].color.value() + shift) % colors));
      break;
    }
    case MutationKind::kEdgeRecolored:
    case MutationKind::kEdgeKeepColor: {
      // Move one endpoint of the edge to a vertex not already joined to the
      // other endpoint in this tree.
      for (;;) {
        const Vertex keep = rng.below(2) == 0 ? edges[at].u : edges[at].v;
        const Vertex x(static_cast<std::uint32_t>(rng.below(n)));
        if (x == edges[at].u || x == edges[at].v || tree.contains(keep, x)) {
          continue;
        }
        const Color c = kind == MutationKind::kEdgeRecolored
                            ? coloring.color_of(keep, x)
                            : edges[at].color;
        edges[at] = ColoredEdge{keep, x, c}.canonical();
        break;
      }
      break;
    }
    case MutationKind::kRoot: {
      const std::uint32_t shift = 1 + static_cast<std::uint32_t>(rng.below(n - 1));
      root = Vertex(static_cast<std::uint32_t>((root.value() + shift) % n));
      break;
    }
  }
  out.trees[t] = RainbowTree::unchecked(n, root, std::move(edges));
  return out;
}

}  // namespace rainbow::testing

#endif  // RAINBOW_TESTS_MUTATION_HPP_
