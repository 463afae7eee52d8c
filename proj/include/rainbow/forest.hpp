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

#ifndef RAINBOW_FOREST_HPP_
#define RAINBOW_FOREST_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

// Rooted spanning tree of K_{2m}. Stores the edge list together with an
// adjacency index, a color -> edge index and the set of root-adjacent leaves.
//
// Trees made by the construction are always rainbow spanning trees. Trees
// read from a certificate file are built with `unchecked` and may be
// anything; only the verifier should look at those.
class RainbowTree {
 public:
  // Throws kVertexOutOfRange, kSelfLoop, kNotSpanningTree, kCycleDetected
  // or kColorClash unless the edges form a rainbow spanning tree.
  static RainbowTree from_edges(std::size_t vertex_count, Vertex root,
                                std::vector<ColoredEdge> edges);
  static RainbowTree unchecked(std::size_t vertex_count, Vertex root,
                               std::vector<ColoredEdge> edges);

  Vertex root() const { return root_; }
  std::size_t vertex_count() const { return vertex_count_; }

  // Canonical edges sorted by (u, v).
  std::span<const ColoredEdge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex x) const {
    return adjacency_[x.value()];
  }
  std::size_t degree(Vertex x) const { return adjacency_[x.value()].size(); }
  bool contains(Vertex a, Vertex b) const;

  // Unique tree edge of color c; nullopt only for malformed trees.
  std::optional<ColoredEdge> find_color(Color c) const;

  // Sorted {x : deg(x) = 1 and {root, x} is an edge}.
  std::span<const Vertex> root_leaves() const { return root_leaves_; }
  bool is_root_leaf(Vertex x) const;
  // Same set derived from adjacency alone.
  std::vector<Vertex> recompute_root_leaves() const;

  // Throws kLeafSetMismatch or kColorClash if the redundant indexes
  // disagree with the edge list.
  void check_consistency() const;

  friend bool operator==(const RainbowTree& a, const RainbowTree& b) {
    return a.root_ == b.root_ && a.vertex_count_ == b.vertex_count_ &&
           a.edges_ == b.edges_;
  }

 private:
  RainbowTree(std::size_t vertex_count, Vertex root,
              std::vector<ColoredEdge> edges);

  std::size_t vertex_count_ = 0;
  Vertex root_;
  std::vector<ColoredEdge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::int32_t> color_edge_;  // color -> index into edges_
  std::vector<Vertex> root_leaves_;

  friend RainbowTree apply_swap(const EdgeColoring&, const RainbowTree&,
                                Vertex, Vertex, Vertex, Vertex, Vertex);
};

// Spanning star centered at r.
RainbowTree base_star(const EdgeColoring& coloring, Vertex r);

// T - ry - rv + yw + vv'. The added edges take their colors from the
// coloring. The result is rainbow exactly when phi(ry) = phi(vv') and
// phi(rv) = phi(yw).
//
// Errors: kNotPendant if r is not the root or y, v are not root-adjacent
// leaves; kDegenerateSwap if y == v, w in {r, y}, v' in {r, v} or an added
// edge is already present; kColorClash if the result repeats a color.
RainbowTree apply_swap(const EdgeColoring& coloring, const RainbowTree& tree,
                       Vertex r, Vertex y, Vertex v, Vertex w, Vertex v_prime);

// Throws kColorClash if the tree has no edge of color c.
ColoredEdge tree_edge_of_color(const RainbowTree& tree, Color c);

inline std::vector<Vertex> root_leaf_set(const RainbowTree& tree) {
  return {tree.root_leaves().begin(), tree.root_leaves().end()};
}

struct Forest {
  std::size_t m = 0;
  std::vector<RainbowTree> trees;
  std::string coloring_digest;

  std::vector<Vertex> roots() const;
};

// {"m": m, "coloring_digest": "...", "trees": [{"root": r, "edges":
// [[u, v, c], ...]}, ...]}. The digest key is optional on input. Trees are
// read unchecked.
std::string serialize_forest(const Forest& forest);
Forest parse_forest(std::string_view text);

// One undirected graph per tree, edge label = color index.
std::string forest_to_dot(const Forest& forest);

}  // namespace rainbow

#endif  // RAINBOW_FOREST_HPP_
