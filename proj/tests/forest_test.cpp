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
#include <functional>
#include <set>

#include "rainbow/coloring.hpp"
#include "rainbow/error.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {
namespace {

Vertex V(std::uint32_t x) { return Vertex(x); }
Color C(std::uint32_t x) { return Color(x); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

std::vector<Vertex> leaves_by_definition(const RainbowTree& t) {
  std::vector<std::size_t> deg(t.vertex_count(), 0);
  for (const ColoredEdge& e : t.edges()) {
    ++deg[e.u.value()];
    ++deg[e.v.value()];
  }
  std::vector<Vertex> out;
  for (const ColoredEdge& e : t.edges()) {
    if (e.touches(t.root()) && deg[e.other(t.root()).value()] == 1) {
      out.push_back(e.other(t.root()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(BaseStar, FourVertexExample) {
  const EdgeColoring c = round_robin(2);
  const RainbowTree s = base_star(c, V(3));
  const std::vector<ColoredEdge> want{
      {V(0), V(3), C(0)}, {V(1), V(3), C(1)}, {V(2), V(3), C(2)}};
  ASSERT_EQ(s.edges().size(), 3u);
  EXPECT_TRUE(std::equal(s.edges().begin(), s.edges().end(), want.begin()));
  EXPECT_EQ(tree_edge_of_color(s, C(1)), (ColoredEdge{V(3), V(1), C(1)}));
  EXPECT_EQ(root_leaf_set(s), (std::vector<Vertex>{V(0), V(1), V(2)}));
}

TEST(BaseStar, EveryRootGivesARainbowStar) {
  for (std::size_t m : {1u, 3u, 6u}) {
    const EdgeColoring c = permuted_round_robin(m, 9);
    for (std::uint32_t r = 0; r < 2 * m; ++r) {
      const RainbowTree s = base_star(c, V(r));
      EXPECT_EQ(s.root_leaves().size(), 2 * m - 1);
      EXPECT_EQ(s.degree(V(r)), 2 * m - 1);
      std::set<Color> colors;
      for (std::uint32_t col = 0; col < c.color_count(); ++col) {
        const ColoredEdge e = tree_edge_of_color(s, C(col));
        EXPECT_EQ(e.color, C(col));
        EXPECT_TRUE(e.touches(V(r)));
        colors.insert(e.color);
      }
      EXPECT_EQ(colors.size(), c.color_count());
    }
  }
}

TEST(FromEdges, RejectsNonTrees) {
  const EdgeColoring c = round_robin(2);
  const std::vector<ColoredEdge> path{
      {V(0), V(1), C(2)}, {V(1), V(2), C(0)}, {V(2), V(3), C(2)}};
  EXPECT_EQ(code_of([&] { RainbowTree::from_edges(4, V(0), path); }),
            ErrorCode::kColorClash);
  const std::vector<ColoredEdge> cycle{
      {V(0), V(1), C(2)}, {V(1), V(2), C(0)}, {V(0), V(2), C(1)}};
  EXPECT_EQ(code_of([&] { RainbowTree::from_edges(4, V(0), cycle); }),
            ErrorCode::kCycleDetected);
  const std::vector<ColoredEdge> short_list{{V(0), V(1), C(2)}};
  EXPECT_EQ(code_of([&] { RainbowTree::from_edges(4, V(0), short_list); }),
            ErrorCode::kNotSpanningTree);
  EXPECT_EQ(code_of([&] { RainbowTree::from_edges(4, V(9), path); }),
            ErrorCode::kVertexOutOfRange);
}

TEST(ApplySwap, FourVertexExample) {
  const EdgeColoring c = round_robin(2);
  const RainbowTree s = base_star(c, V(3));
  // w = partner(phi(3,1), 0), v' = partner(phi(3,0), 1).
  EXPECT_EQ(c.partner(c.color_of(V(3), V(1)), V(0)), V(2));
  EXPECT_EQ(c.partner(c.color_of(V(3), V(0)), V(1)), V(2));
  const RainbowTree t = apply_swap(c, s, V(3), V(0), V(1), V(2), V(2));
  const std::vector<ColoredEdge> want{
      {V(0), V(2), C(1)}, {V(1), V(2), C(0)}, {V(2), V(3), C(2)}};
  ASSERT_EQ(t.edges().size(), 3u);
  EXPECT_TRUE(std::equal(t.edges().begin(), t.edges().end(), want.begin()));
  EXPECT_EQ(t.root(), V(3));
  EXPECT_EQ(t.degree(V(3)), s.degree(V(3)) - 2);
  EXPECT_EQ(tree_edge_of_color(t, C(0)), (ColoredEdge{V(1), V(2), C(0)}));
  // Root 3 keeps only the edge to 2, and 2 is not a leaf.
  EXPECT_TRUE(t.root_leaves().empty());
  EXPECT_EQ(t.recompute_root_leaves(), leaves_by_definition(t));
}

TEST(ApplySwap, ForcedViolations) {
  const EdgeColoring c = round_robin(2);
  const RainbowTree s = base_star(c, V(3));
  const RainbowTree t = apply_swap(c, s, V(3), V(0), V(1), V(2), V(2));
  EXPECT_EQ(code_of([&] { apply_swap(c, t, V(3), V(0), V(2), V(1), V(1)); }),
            ErrorCode::kNotPendant);
  EXPECT_EQ(code_of([&] { apply_swap(c, s, V(0), V(1), V(2), V(0), V(0)); }),
            ErrorCode::kNotPendant);
  EXPECT_EQ(code_of([&] { apply_swap(c, s, V(3), V(0), V(0), V(1), V(1)); }),
            ErrorCode::kDegenerateSwap);
  EXPECT_EQ(code_of([&] { apply_swap(c, s, V(3), V(0), V(1), V(3), V(2)); }),
            ErrorCode::kDegenerateSwap);
  // Adds {0,2} with color 1 while {3,1} keeps color 1.
  EXPECT_EQ(code_of([&] { apply_swap(c, s, V(3), V(0), V(2), V(2), V(1)); }),
            ErrorCode::kColorClash);
}

// Random colour-preserving swaps: y, v root leaves, w = partner(phi(rv), y),
// v' = partner(phi(ry), v). Whatever succeeds must keep the incremental
// root-leaf set equal to the from-scratch one.
TEST(ApplySwap, IncrementalLeavesMatchRecomputation) {
  std::size_t applied = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t m = 3 + seed % 6;
    const EdgeColoring c = permuted_round_robin(m, seed);
    Rng rng(seed);
    const Vertex r(static_cast<std::uint32_t>(rng.below(2 * m)));
    RainbowTree t = base_star(c, r);
    for (int step = 0; step < 30 && t.root_leaves().size() >= 2; ++step) {
      std::vector<Vertex> leaves = root_leaf_set(t);
      rng.shuffle(leaves);
      const Vertex y = leaves[0];
      const Vertex v = leaves[1];
      const Vertex w = c.partner(c.color_of(r, v), y);
      const Vertex vp = c.partner(c.color_of(r, y), v);
      try {
        RainbowTree next = apply_swap(c, t, r, y, v, w, vp);
        EXPECT_EQ(next.degree(r), t.degree(r) - 2);
        t = std::move(next);
        ++applied;
      } catch (const Error& e) {
        EXPECT_TRUE(e.code() == ErrorCode::kDegenerateSwap ||
                    e.code() == ErrorCode::kCycleDetected)
            << e.what();
        continue;
      }
      EXPECT_EQ(root_leaf_set(t), t.recompute_root_leaves());
      EXPECT_EQ(root_leaf_set(t), leaves_by_definition(t));
      EXPECT_NO_THROW(t.check_consistency());
      EXPECT_NO_THROW(RainbowTree::from_edges(
          2 * m, r, {t.edges().begin(), t.edges().end()}));
    }
  }
  EXPECT_GT(applied, 100u);
}

TEST(ForestIo, RoundTripAndDot) {
  const EdgeColoring c = round_robin(3);
  Forest f{3, {base_star(c, V(0))}, c.digest()};
  const std::string text = serialize_forest(f);
  const Forest back = parse_forest(text);
  EXPECT_EQ(back.m, 3u);
  EXPECT_EQ(back.coloring_digest, c.digest());
  ASSERT_EQ(back.trees.size(), 1u);
  EXPECT_EQ(back.trees[0], f.trees[0]);
  EXPECT_EQ(serialize_forest(back), text);
  const std::string dot = forest_to_dot(f);
  EXPECT_NE(dot.find("graph T1"), std::string::npos);
  EXPECT_EQ(code_of([] { parse_forest("[1,2"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { parse_forest(R"({"trees": []})"); }),
            ErrorCode::kSchemaError);
}

}  // namespace
}  // namespace rainbow
