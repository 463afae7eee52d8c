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
#include <numeric>
#include <set>

#include "rainbow/coloring.hpp"
#include "rainbow/constructor.hpp"
#include "rainbow/error.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow {
namespace {

using EdgeKeys = std::vector<std::uint64_t>;

EdgeKeys keys_of(const RainbowTree& t) {
  EdgeKeys out;
  for (const ColoredEdge& e : t.edges()) out.push_back(pair_key(e));
  std::sort(out.begin(), out.end());
  return out;
}

// All (n-1)-subsets of the edge set that are rainbow spanning trees.
std::set<EdgeKeys> subsets_brute_force(const EdgeColoring& c) {
  const auto all = c.edges();
  const std::size_t n = c.vertex_count();
  std::set<EdgeKeys> out;
  std::vector<bool> pick(all.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n - 1), true);
  do {
    std::vector<std::uint32_t> comp(n);
    std::iota(comp.begin(), comp.end(), 0u);
    std::set<Color> colors;
    EdgeKeys keys;
    bool ok = true;
    for (std::size_t j = 0; j < all.size() && ok; ++j) {
      if (!pick[j]) continue;
      const std::uint32_t a = comp[all[j].u.value()];
      const std::uint32_t b = comp[all[j].v.value()];
      ok = a != b && colors.insert(all[j].color).second;
      for (auto& x : comp) {
        if (x == a) x = b;
      }
      keys.push_back(pair_key(all[j]));
    }
    if (ok) {
      std::sort(keys.begin(), keys.end());
      out.insert(keys);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

TEST(Enumerate, TwoVertices) {
  EXPECT_EQ(enumerate_rainbow_spanning_trees(round_robin(1)).size(), 1u);
  EXPECT_EQ(max_disjoint_rainbow_trees(round_robin(1)), 1u);
}

TEST(Enumerate, FourVerticesGivesTheFourStars) {
  const EdgeColoring c = round_robin(2);
  const auto trees = enumerate_rainbow_spanning_trees(c);
  ASSERT_EQ(trees.size(), 4u);
  std::set<EdgeKeys> stars;
  for (std::uint32_t r = 0; r < 4; ++r) stars.insert(keys_of(base_star(c, Vertex(r))));
  for (const RainbowTree& t : trees) EXPECT_TRUE(stars.contains(keys_of(t)));
  EXPECT_EQ(max_disjoint_rainbow_trees(c), 1u);
}

TEST(Enumerate, MatchesSubsetBruteForce) {
  for (std::size_t m : {2u, 3u}) {
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const EdgeColoring c = permuted_round_robin(m, seed);
      std::set<EdgeKeys> got;
      for (const RainbowTree& t : enumerate_rainbow_spanning_trees(c)) {
        EXPECT_TRUE(got.insert(keys_of(t)).second) << "duplicate tree";
        EXPECT_TRUE(verify_rainbow_spanning_tree(c, t).pass);
      }
      EXPECT_EQ(got, subsets_brute_force(c)) << "m=" << m;
    }
  }
}

TEST(Enumerate, CanonicalOrderAndDeterminism) {
  const EdgeColoring c = permuted_round_robin(4, 3);
  const auto a = enumerate_rainbow_spanning_trees(c);
  const auto b = enumerate_rainbow_spanning_trees(c);
  EXPECT_EQ(a, b);
  for (std::size_t j = 1; j < a.size(); ++j) {
    EXPECT_TRUE(std::lexicographical_compare(
        a[j - 1].edges().begin(), a[j - 1].edges().end(),
        a[j].edges().begin(), a[j].edges().end()));
  }
}

TEST(Enumerate, ColorPermutationInvariantVertexPermutationEquivariant) {
  const EdgeColoring base = round_robin(4);
  const auto base_trees = enumerate_rainbow_spanning_trees(base);
  Rng rng(8);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<std::uint32_t> sigma(8), pi(7);
    std::iota(sigma.begin(), sigma.end(), 0u);
    std::iota(pi.begin(), pi.end(), 0u);
    rng.shuffle(sigma);
    rng.shuffle(pi);
    const std::vector<std::uint32_t> ident_v = [] {
      std::vector<std::uint32_t> v(8);
      std::iota(v.begin(), v.end(), 0u);
      return v;
    }();
    const EdgeColoring recolored = permute_coloring(base, ident_v, pi);
    EXPECT_EQ(enumerate_rainbow_spanning_trees(recolored).size(),
              base_trees.size());

    const EdgeColoring moved = permute_coloring(base, sigma, pi);
    std::set<EdgeKeys> want;
    for (const RainbowTree& t : base_trees) {
      EdgeKeys keys;
      for (const ColoredEdge& e : t.edges()) {
        keys.push_back(pair_key(Vertex(sigma[e.u.value()]),
                                Vertex(sigma[e.v.value()])));
      }
      std::sort(keys.begin(), keys.end());
      want.insert(keys);
    }
    std::set<EdgeKeys> got;
    for (const RainbowTree& t : enumerate_rainbow_spanning_trees(moved)) {
      got.insert(keys_of(t));
    }
    EXPECT_EQ(got, want);
  }
}

TEST(Packing, SixVerticesHoldsTwoOrMore) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const EdgeColoring c = permuted_round_robin(3, seed);
    const std::size_t best = max_disjoint_rainbow_trees(c);
    EXPECT_GE(best, 2u);
    EXPECT_GE(best, build_forest(c).forest.trees.size());
    EXPECT_LE(best, 3u);
  }
}

TEST(Packing, AgreesWithPairAndTripleScan) {
  // For K_6 the answer is at most 3, so a direct scan settles it.
  const EdgeColoring c = permuted_round_robin(3, 11);
  const auto trees = enumerate_rainbow_spanning_trees(c);
  std::vector<std::set<std::uint64_t>> sets;
  for (const RainbowTree& t : trees) {
    const EdgeKeys k = keys_of(t);
    sets.emplace_back(k.begin(), k.end());
  }
  auto disjoint = [&](std::size_t a, std::size_t b) {
    for (std::uint64_t x : sets[a]) {
      if (sets[b].contains(x)) return false;
    }
    return true;
  };
  std::size_t best = trees.empty() ? 0 : 1;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if (!disjoint(a, b)) continue;
      best = std::max<std::size_t>(best, 2);
      for (std::size_t d = b + 1; d < sets.size(); ++d) {
        if (disjoint(a, d) && disjoint(b, d)) best = 3;
      }
    }
  }
  EXPECT_EQ(max_disjoint_rainbow_trees(c), best);
}

TEST(Packing, EightVerticesAtLeastTheConstruction) {
  const EdgeColoring c = permuted_round_robin(4, 2);
  const std::size_t best = max_disjoint_rainbow_trees(c);
  EXPECT_GE(best, build_forest(c).forest.trees.size());
  EXPECT_LE(best, 4u);
}

TEST(Parallel, MatchesSerial) {
  for (std::size_t m : {1u, 2u, 3u, 4u}) {
    for (std::uint64_t seed : {0u, 5u}) {
      const EdgeColoring c = permuted_round_robin(m, seed);
      EXPECT_EQ(enumerate_rainbow_spanning_trees_parallel(c),
                enumerate_rainbow_spanning_trees(c));
      EXPECT_EQ(max_disjoint_rainbow_trees_parallel(c),
                max_disjoint_rainbow_trees(c));
    }
  }
}

TEST(Caps, OversizedInstancesAreRefused) {
  const EdgeColoring c = round_robin(5);
  try {
    max_disjoint_rainbow_trees(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceTooLarge);
  }
  try {
    enumerate_rainbow_spanning_trees(round_robin(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceTooLarge);
  }
  try {
    enumerate_rainbow_spanning_trees_parallel(round_robin(3), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceTooLarge);
  }
  EXPECT_EQ(enumerate_rainbow_spanning_trees(round_robin(2), 4).size(), 4u);
}

}  // namespace
}  // namespace rainbow
