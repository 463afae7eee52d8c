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

#ifndef RAINBOW_VERIFIER_HPP_
#define RAINBOW_VERIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/forest.hpp"
#include "rainbow/trace.hpp"

namespace rainbow {

// Certificate checks. Everything here is recomputed from raw edge lists and
// coloring lookups; none of the trees' cached indexes are trusted and no
// construction code is reused. Failures are results, never exceptions.

struct TreeCheck {
  std::size_t edge_count = 0;
  bool edge_count_ok = false;
  bool endpoints_valid = false;  // in range, no loops, no repeated pairs
  bool colors_match = false;     // stored color == coloring lookup
  bool rainbow = false;
  bool acyclic = false;
  bool connected = false;  // spanning: every vertex reached from the root
  bool pass = false;
  std::vector<std::string> problems;
};

struct DisjointCheck {
  // shared[a][b] = number of vertex pairs used by both trees a and b.
  std::vector<std::vector<std::size_t>> shared;
  std::size_t total_edges = 0;
  std::size_t union_size = 0;
  bool pass = false;
};

struct RootCheck {
  Vertex root;
  std::int64_t expected_degree = 0;
  std::int64_t actual_degree = 0;
  std::int64_t leaf_lower_bound = 0;  // clamped at 0
  std::int64_t actual_leaves = 0;
  bool pass = false;
};

struct StructureCheck {
  std::size_t psi = 0;
  bool roots_distinct = false;
  std::vector<RootCheck> trees;
  bool pass = false;
  std::vector<std::string> problems;
};

struct RoundSummary {
  int k = 0;
  std::size_t common_leaves = 0;  // |L_{k-1}| recomputed from the replay
  std::int64_t leaf_bound = 0;
  std::size_t lstar = 0;
  std::int64_t elimination_cap = 0;
  std::size_t min_admissible = 0;
  std::size_t max_eliminated = 0;
};

struct ReplayedTree {
  Vertex root;
  std::vector<std::uint64_t> pairs;  // sorted pair keys
};

struct TraceCheck {
  std::vector<RoundSummary> rounds;
  std::vector<ReplayedTree> final_trees;
  std::vector<std::string> failures;
  bool pass = false;
};

struct VerificationReport {
  bool m_matches = false;
  bool digest_matches = false;  // true when the forest carries no digest
  bool count_matches_omega = false;
  std::vector<TreeCheck> trees;
  DisjointCheck disjoint;
  StructureCheck structure;
  std::optional<TraceCheck> trace;
  bool trace_matches_forest = true;
  bool pass = false;

  std::string to_json() const;
};

TreeCheck verify_rainbow_spanning_tree(const EdgeColoring& coloring,
                                       const RainbowTree& tree);

DisjointCheck verify_edge_disjoint(const Forest& forest);

// f(psi): distinct roots; deg(r_1) = (2m-1) - 2(psi-1) with at least
// (2m-1) - 4(psi-1) root leaves; for i >= 2 deg(r_i) = (2m-1) - i -
// 2(psi-i) with at least (2m-1) - 2i - 4(psi-i) root leaves.
StructureCheck verify_structure_f(const Forest& forest, std::size_t psi,
                                  std::size_t m);

// Replays the trace from the base star and checks, round by round: the
// common leaf bound, |L*| > 6k - 7, candidate bookkeeping, nonempty
// candidate sets, edge-disjointness of every revised tree from the trees
// before and after it (P1-P6), of every partial k-th tree (P7-P11), and
// acyclicity of every partial (P12, P13).
TraceCheck verify_trace_bounds(const ConstructionTrace& trace, std::size_t m);

VerificationReport verify_all(const EdgeColoring& coloring,
                              const Forest& forest,
                              const ConstructionTrace* trace = nullptr);

}  // namespace rainbow

#endif  // RAINBOW_VERIFIER_HPP_
