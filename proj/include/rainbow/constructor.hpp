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

#ifndef RAINBOW_CONSTRUCTOR_HPP_
#define RAINBOW_CONSTRUCTOR_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/error.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/trace.hpp"

namespace rainbow {

// floor(sqrt(6m + 9) / 3), computed with an integer square root.
std::size_t omega(std::size_t m);

// Lower bound 2m - 3k^2 + 6k - 1 on the common leaf set entering round k.
std::int64_t leaf_bound(std::size_t m, std::size_t k);

enum class SelectionRule { kMinIndex, kMaxIndex, kRandom };

struct SelectionPolicy {
  SelectionRule rule = SelectionRule::kMinIndex;
  std::uint64_t seed = 0;

  // "min", "max" or "random". Throws kInvalidArgument.
  static SelectionPolicy parse(std::string_view name, std::uint64_t seed = 0);
  std::string name() const;
};

// Makes every free choice of the construction: the base root, the anchor
// pair of each round and the swap vertex of each revision.
class Selector {
 public:
  explicit Selector(SelectionPolicy policy)
      : policy_(policy), rng_(policy.seed) {}

  Vertex pick_root(std::size_t vertex_count);
  // Two distinct members of a sorted set with at least two elements.
  std::pair<Vertex, Vertex> pick_anchors(std::span<const Vertex> sorted);
  Vertex pick_candidate(std::span<const Vertex> sorted);

 private:
  SelectionPolicy policy_;
  Rng rng_;
};

// Vertices fixed during round k. Per-tree vectors are indexed by i - 1.
struct RoundRecord {
  std::size_t k = 0;
  Vertex r_k;
  Vertex w_k;
  std::vector<Vertex> v;        // v_i
  std::vector<Vertex> w;        // w_i
  std::vector<Vertex> v_prime;  // v'_i
  std::vector<Vertex> w_prime;  // w'_i, one more entry after finalize
};

// T_k^k(i) while round k is in progress. Not rainbow until finalized.
struct PartialTree {
  Vertex root;
  std::vector<ColoredEdge> edges;

  bool contains(Vertex a, Vertex b) const;
  std::size_t degree(Vertex x) const;
};

struct CandidateReport {
  std::vector<Vertex> candidates_before;  // L*_{k-1}, sorted
  std::array<std::vector<Vertex>, kRuleCount> eliminated;
  std::vector<Vertex> admissible;  // sorted
};

// Engine state between and during rounds. Tree indices in the public
// functions below are 1-based to match round records and traces.
struct ConstructionState {
  const EdgeColoring* coloring = nullptr;
  // Round in progress, or the next round once `trees` has k entries.
  std::size_t k = 1;
  std::vector<RainbowTree> trees;
  std::vector<Vertex> common_leaves;  // sorted L_{k-1}
  std::optional<PartialTree> partial_kth;
  RoundRecord record;
  bool trace_on = false;
  ConstructionTrace trace;

  const EdgeColoring& colors() const { return *coloring; }
  const RainbowTree& tree(std::size_t i) const { return trees[i - 1]; }
  Vertex root(std::size_t i) const { return trees[i - 1].root(); }
};

// Base step: one spanning star rooted by the selector, common leaves = its
// leaves.
ConstructionState start_construction(const EdgeColoring& coloring,
                                     Selector& selector, bool trace_on);

// Begins round k = trees.size() + 1: checks the leaf bound, picks (r_k, w_k)
// and sets T_k^k(0) to the star at r_k. Throws kLeafSetExhausted,
// kLeafBoundViolated, kRoundOutOfRange.
std::pair<Vertex, Vertex> select_anchors(ConstructionState& state,
                                         Selector& selector);

// Members of L*_{k-1} = L_{k-1} \ {r_k, w_k} satisfying R1..R11 for tree i,
// with the per-rule eliminations. Trees 1..i-1 must already be revised.
CandidateReport admissible_candidates(const ConstructionState& state,
                                      std::size_t i);

// T_i^k = T_i^{k-1}[r_i; r_k, v_i; w_i, v'_i], then T_k^k(i) from
// T_k^k(i-1). Records v_i, w_i, v'_i, w'_i.
const RainbowTree& revise_tree(ConstructionState& state, std::size_t i,
                               Vertex v_i);

// T_k^k(i) = T_k^k(i-1) - r_k w_i + w_i w'_i. Needs w_i recorded.
// Throws kCycleDetected if w_i is not a leaf on r_k or the result has a
// cycle.
const PartialTree& extend_kth_partial(ConstructionState& state,
                                      std::size_t i);

// T_k^k = T_k^k(k-1) - r_k w_k + w_k w'_k as a rainbow spanning tree.
RainbowTree finalize_kth(ConstructionState& state);

// One full round: anchors, revisions 1..k-1, the new tree, the new common
// leaf set and the f(k) check. Throws on any invariant violation.
void step(ConstructionState& state, Selector& selector);

// Checks f(psi) on the first psi trees: exact root degrees and root-leaf
// lower bounds. Throws kFValidationFailed.
void check_structure(std::span<const RainbowTree> trees, std::size_t m);

struct BuildResult {
  Forest forest;
  ConstructionTrace trace;
};

// Thrown by build_forest when an internal invariant fails. Carries the
// trace recorded up to the failure.
class ConstructionFailure : public Error {
 public:
  ConstructionFailure(const Error& cause, ConstructionTrace trace)
      : Error(cause), trace_(std::move(trace)) {}
  const ConstructionTrace& trace() const { return trace_; }

 private:
  ConstructionTrace trace_;
};

// omega(m) pairwise edge-disjoint rainbow spanning trees.
BuildResult build_forest(const EdgeColoring& coloring,
                         SelectionPolicy policy = {}, bool trace_on = true);

}  // namespace rainbow

#endif  // RAINBOW_CONSTRUCTOR_HPP_
