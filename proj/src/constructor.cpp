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

#include "rainbow/constructor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace rainbow {
namespace {

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool sorted_contains(std::span<const Vertex> xs, Vertex x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

[[noreturn]] void fail(ErrorCode code, std::size_t k, std::size_t i,
                       const std::string& what) {
  std::ostringstream os;
  os << "round " << k;
  if (i > 0) os << ", tree " << i;
  os << ": " << what;
  throw Error(code, os.str());
}

// Union-find acyclicity check of an edge list on n vertices.
bool is_forest(std::size_t n, std::span<const ColoredEdge> edges) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&parent](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const ColoredEdge& e : edges) {
    const std::uint32_t a = find(e.u.value());
    const std::uint32_t b = find(e.v.value());
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::vector<ColoredEdge> star_edges(const EdgeColoring& coloring, Vertex r) {
  std::vector<ColoredEdge> out;
  const auto n = static_cast<std::uint32_t>(coloring.vertex_count());
  for (std::uint32_t x = 0; x < n; ++x) {
    if (Vertex(x) != r) out.push_back({r, Vertex(x), coloring.color_of(r, Vertex(x))});
  }
  return out;
}

// Replaces edge {center, leaf} of the partial tree by {leaf, target}.
void replace_pendant(PartialTree& partial, std::size_t n, Vertex leaf,
                     Vertex target, Color color, std::size_t k,
                     std::size_t i) {
  if (!partial.contains(partial.root, leaf) || partial.degree(leaf) != 1) {
    std::ostringstream os;
    os << "vertex " << leaf << " is not a leaf adjacent to r_k";
    fail(ErrorCode::kCycleDetected, k, i, os.str());
  }
  const std::uint64_t removed = pair_key(partial.root, leaf);
  std::erase_if(partial.edges, [removed](const ColoredEdge& e) {
    return pair_key(e) == removed;
  });
  partial.edges.push_back(ColoredEdge{leaf, target, color}.canonical());
  if (!is_forest(n, partial.edges)) {
    fail(ErrorCode::kCycleDetected, k, i, "partial tree has a cycle");
  }
}

CandidateReport compute_candidates(const ConstructionState& state,
                                   std::size_t i) {
  const EdgeColoring& phi = state.colors();
  const RoundRecord& rec = state.record;
  const std::size_t k = rec.k;
  const Vertex r_i = state.root(i);
  const Vertex r_k = rec.r_k;
  const Vertex w_k = rec.w_k;

  CandidateReport report;
  for (Vertex x : state.common_leaves) {
    if (x != r_k && x != w_k) report.candidates_before.push_back(x);
  }

  // Every restriction has the form "phi(v x) != c" for some fixed x, which
  // rules out exactly the one vertex partner(c, x).
  std::array<std::vector<Vertex>, kRuleCount> forbidden;
  auto forbid = [&](int rule, Color c, Vertex x) {
    forbidden[rule - kFirstRule].push_back(phi.partner(c, x));
  };
  // phi(v r_i) != phi(r_k alpha), skipped when alpha is r_k itself.
  auto forbid_via_rk = [&](int rule, Vertex alpha) {
    if (alpha != r_k) forbid(rule, phi.color_of(r_k, alpha), r_i);
  };

  const Color rirk = phi.color_of(r_i, r_k);
  for (std::size_t c = 1; c < k; ++c) {
    if (c != i) forbid(2, rirk, state.root(c));
  }
  for (std::size_t a = 1; a < i; ++a) {
    forbid(3, phi.color_of(state.root(a), rec.v[a - 1]), r_i);
  }
  for (std::size_t b = i + 1; b < k; ++b) {
    forbid(4, phi.color_of(r_k, state.root(b)), r_i);
  }
  forbid(5, phi.color_of(r_k, w_k), r_i);
  for (std::size_t a = 1; a < i; ++a) forbid_via_rk(6, rec.w_prime[a - 1]);
  if (i >= 2) {
    const Color c = phi.color_of(r_k, rec.w[i - 2]);
    forbid_via_rk(7, phi.partner(c, w_k));
  }
  if (i == 1) {
    const Color c = phi.color_of(r_k, w_k);
    for (std::size_t t = 1; t < k; ++t) {
      const ColoredEdge e = tree_edge_of_color(state.tree(t), c);
      forbid_via_rk(8, e.u);
      forbid_via_rk(8, e.v);
    }
  } else {
    // Trees a < i are already T_a^k, trees b >= i are still T_b^{k-1}.
    const Color c = phi.color_of(r_k, rec.w[i - 2]);
    for (std::size_t t = 1; t < k; ++t) {
      const ColoredEdge e = tree_edge_of_color(state.tree(t), c);
      forbid_via_rk(9, e.u);
      forbid_via_rk(9, e.v);
    }
  }
  forbid(10, rirk, w_k);
  if (i + 1 == k) {
    for (std::size_t d = 1; d + 2 <= k; ++d) {
      forbid(11, phi.color_of(w_k, state.root(d)), r_i);
    }
  }

  std::vector<bool> out(phi.vertex_count(), false);
  for (std::size_t r = 0; r < kRuleCount; ++r) {
    std::vector<Vertex>& xs = forbidden[r];
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (Vertex x : xs) {
      if (sorted_contains(report.candidates_before, x)) {
        report.eliminated[r].push_back(x);
        out[x.value()] = true;
      }
    }
  }
  for (Vertex x : report.candidates_before) {
    if (!out[x.value()]) report.admissible.push_back(x);
  }
  return report;
}

void require_open_round(const ConstructionState& state, const char* op) {
  if (!state.partial_kth || state.trees.size() + 1 != state.record.k) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(op) + " needs a round opened by select_anchors");
  }
}

void revise_unchecked(ConstructionState& state, std::size_t i, Vertex v_i) {
  const EdgeColoring& phi = state.colors();
  RoundRecord& rec = state.record;
  const Vertex r_i = state.root(i);
  const Vertex w_i = phi.partner(phi.color_of(r_i, v_i), rec.r_k);
  const Vertex v_prime = phi.partner(phi.color_of(r_i, rec.r_k), v_i);
  state.trees[i - 1] =
      apply_swap(phi, state.tree(i), r_i, rec.r_k, v_i, w_i, v_prime);
  rec.v.push_back(v_i);
  rec.w.push_back(w_i);
  rec.v_prime.push_back(v_prime);
  extend_kth_partial(state, i);
}

std::vector<Vertex> intersect_root_leaves(std::span<const RainbowTree> trees) {
  std::vector<Vertex> out = trees.front().recompute_root_leaves();
  for (const RainbowTree& t : trees.subspan(1)) {
    const std::vector<Vertex> leaves = t.recompute_root_leaves();
    std::vector<Vertex> next;
    std::set_intersection(out.begin(), out.end(), leaves.begin(),
                          leaves.end(), std::back_inserter(next));
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::size_t omega(std::size_t m) { return isqrt(6 * m + 9) / 3; }

std::int64_t leaf_bound(std::size_t m, std::size_t k) {
  const auto mm = static_cast<std::int64_t>(m);
  const auto kk = static_cast<std::int64_t>(k);
  return 2 * mm - 3 * kk * kk + 6 * kk - 1;
}

SelectionPolicy SelectionPolicy::parse(std::string_view name,
                                       std::uint64_t seed) {
  if (name == "min") return {SelectionRule::kMinIndex, seed};
  if (name == "max") return {SelectionRule::kMaxIndex, seed};
  if (name == "random") return {SelectionRule::kRandom, seed};
  throw Error(ErrorCode::kInvalidArgument,
              "unknown policy \"" + std::string(name) +
                  "\" (expected min, max or random)");
}

std::string SelectionPolicy::name() const {
  switch (rule) {
    case SelectionRule::kMinIndex: return "min";
    case SelectionRule::kMaxIndex: return "max";
    case SelectionRule::kRandom: return "random:" + std::to_string(seed);
  }
  return "?";
}

Vertex Selector::pick_root(std::size_t vertex_count) {
  switch (policy_.rule) {
    case SelectionRule::kMinIndex: return Vertex(0);
    case SelectionRule::kMaxIndex:
      return Vertex(static_cast<std::uint32_t>(vertex_count - 1));
    case SelectionRule::kRandom:
      return Vertex(static_cast<std::uint32_t>(rng_.below(vertex_count)));
  }
  return Vertex(0);
}

std::pair<Vertex, Vertex> Selector::pick_anchors(
    std::span<const Vertex> sorted) {
  const std::size_t size = sorted.size();
  switch (policy_.rule) {
    case SelectionRule::kMinIndex: return {sorted[0], sorted[1]};
    case SelectionRule::kMaxIndex: return {sorted[size - 1], sorted[size - 2]};
    case SelectionRule::kRandom: {
      const std::size_t a = rng_.below(size);
      std::size_t b = rng_.below(size - 1);
      if (b >= a) ++b;
      return {sorted[a], sorted[b]};
    }
  }
  return {sorted[0], sorted[1]};
}

Vertex Selector::pick_candidate(std::span<const Vertex> sorted) {
  switch (policy_.rule) {
    case SelectionRule::kMinIndex: return sorted.front();
    case SelectionRule::kMaxIndex: return sorted.back();
    case SelectionRule::kRandom: return sorted[rng_.below(sorted.size())];
  }
  return sorted.front();
}

bool PartialTree::contains(Vertex a, Vertex b) const {
  const std::uint64_t key = pair_key(a, b);
  return std::any_of(edges.begin(), edges.end(),
                     [key](const ColoredEdge& e) { return pair_key(e) == key; });
}

std::size_t PartialTree::degree(Vertex x) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(),
      [x](const ColoredEdge& e) { return e.touches(x); }));
}

ConstructionState start_construction(const EdgeColoring& coloring,
                                     Selector& selector, bool trace_on) {
  ConstructionState state;
  state.coloring = &coloring;
  state.k = 1;
  state.trace_on = trace_on;
  state.trace.m = coloring.m();
  const Vertex r_1 = selector.pick_root(coloring.vertex_count());
  state.trees.push_back(base_star(coloring, r_1));
  state.common_leaves = root_leaf_set(state.trees.front());
  state.record.k = 1;
  if (trace_on) {
    TraceRecord rec;
    rec.kind = TraceKind::kBase;
    rec.k = 1;
    rec.root = r_1;
    state.trace.records.push_back(std::move(rec));
  }
  return state;
}

std::pair<Vertex, Vertex> select_anchors(ConstructionState& state,
                                         Selector& selector) {
  const std::size_t m = state.colors().m();
  const std::size_t k = state.trees.size() + 1;
  if (k > omega(m)) {
    fail(ErrorCode::kRoundOutOfRange, k, 0,
         "only " + std::to_string(omega(m)) + " rounds are guaranteed");
  }
  const auto size = static_cast<std::int64_t>(state.common_leaves.size());
  if (size < leaf_bound(m, k)) {
    fail(ErrorCode::kLeafBoundViolated, k, 0,
         "|L| = " + std::to_string(size) + " < " +
             std::to_string(leaf_bound(m, k)));
  }
  if (size < 2) {
    fail(ErrorCode::kLeafSetExhausted, k, 0, "fewer than two common leaves");
  }
  const auto [r_k, w_k] = selector.pick_anchors(state.common_leaves);
  state.k = k;
  state.record = RoundRecord{};
  state.record.k = k;
  state.record.r_k = r_k;
  state.record.w_k = w_k;
  state.partial_kth = PartialTree{r_k, star_edges(state.colors(), r_k)};
  return {r_k, w_k};
}

CandidateReport admissible_candidates(const ConstructionState& state,
                                      std::size_t i) {
  require_open_round(state, "admissible_candidates");
  if (i < 1 || i >= state.record.k || state.record.v.size() + 1 != i) {
    throw Error(ErrorCode::kInvalidArgument,
                "tree " + std::to_string(i) + " is not next in round " +
                    std::to_string(state.record.k));
  }
  return compute_candidates(state, i);
}

const RainbowTree& revise_tree(ConstructionState& state, std::size_t i,
                               Vertex v_i) {
  const CandidateReport report = admissible_candidates(state, i);
  if (!sorted_contains(report.admissible, v_i)) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(v_i.value()) +
                    " is not an admissible swap vertex for tree " +
                    std::to_string(i));
  }
  revise_unchecked(state, i, v_i);
  return state.tree(i);
}

const PartialTree& extend_kth_partial(ConstructionState& state,
                                      std::size_t i) {
  require_open_round(state, "extend_kth_partial");
  RoundRecord& rec = state.record;
  if (i < 1 || rec.w.size() < i || rec.w_prime.size() + 1 != i) {
    throw Error(ErrorCode::kInvalidArgument,
                "partial tree step " + std::to_string(i) + " out of order");
  }
  const EdgeColoring& phi = state.colors();
  const Vertex w_i = rec.w[i - 1];
  const Color color = i == 1 ? phi.color_of(rec.r_k, rec.w_k)
                             : phi.color_of(rec.r_k, rec.w[i - 2]);
  const Vertex w_prime = phi.partner(color, w_i);
  replace_pendant(*state.partial_kth, phi.vertex_count(), w_i, w_prime, color,
                  rec.k, i);
  rec.w_prime.push_back(w_prime);
  return *state.partial_kth;
}

RainbowTree finalize_kth(ConstructionState& state) {
  require_open_round(state, "finalize_kth");
  RoundRecord& rec = state.record;
  const std::size_t k = rec.k;
  if (rec.w.size() + 1 != k || rec.w_prime.size() + 1 != k) {
    throw Error(ErrorCode::kInvalidArgument,
                "finalize_kth before all revisions of round " +
                    std::to_string(k));
  }
  const EdgeColoring& phi = state.colors();
  const Color color = phi.color_of(rec.r_k, rec.w[k - 2]);
  const Vertex w_prime = phi.partner(color, rec.w_k);
  replace_pendant(*state.partial_kth, phi.vertex_count(), rec.w_k, w_prime,
                  color, k, k);
  rec.w_prime.push_back(w_prime);
  return RainbowTree::from_edges(phi.vertex_count(), rec.r_k,
                                 state.partial_kth->edges);
}

void check_structure(std::span<const RainbowTree> trees, std::size_t m) {
  const auto psi = static_cast<std::int64_t>(trees.size());
  const auto top = static_cast<std::int64_t>(2 * m - 1);
  std::vector<Vertex> roots;
  for (std::int64_t i = 1; i <= psi; ++i) {
    const RainbowTree& t = trees[i - 1];
    const std::int64_t want_degree =
        i == 1 ? top - 2 * (psi - 1) : top - i - 2 * (psi - i);
    const std::int64_t want_leaves =
        i == 1 ? top - 4 * (psi - 1) : top - 2 * i - 4 * (psi - i);
    const auto degree = static_cast<std::int64_t>(t.degree(t.root()));
    const auto leaves = static_cast<std::int64_t>(t.root_leaves().size());
    if (degree != want_degree || leaves < want_leaves) {
      std::ostringstream os;
      os << "f(" << psi << ") fails at tree " << i << ": degree " << degree
         << " (want " << want_degree << "), root leaves " << leaves
         << " (want >= " << want_leaves << ")";
      throw Error(ErrorCode::kFValidationFailed, os.str());
    }
    roots.push_back(t.root());
  }
  std::sort(roots.begin(), roots.end());
  if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) {
    throw Error(ErrorCode::kFValidationFailed, "roots are not distinct");
  }
}

void step(ConstructionState& state, Selector& selector) {
  const std::size_t m = state.colors().m();
  const std::size_t bound_lhs = state.common_leaves.size();
  select_anchors(state, selector);
  const std::size_t k = state.k;
  const RoundRecord& rec = state.record;

  for (std::size_t i = 1; i < k; ++i) {
    CandidateReport report = compute_candidates(state, i);
    TraceRecord trace_rec;
    if (state.trace_on) {
      trace_rec.kind = TraceKind::kRevise;
      trace_rec.k = static_cast<int>(k);
      trace_rec.i = static_cast<int>(i);
      trace_rec.root = state.root(i);
      trace_rec.r_k = rec.r_k;
      trace_rec.w_k = rec.w_k;
      trace_rec.candidates_before = report.candidates_before;
      trace_rec.eliminated = report.eliminated;
      trace_rec.admissible = report.admissible;
      trace_rec.bound_lhs = bound_lhs;
      trace_rec.bound_rhs = leaf_bound(m, k);
      trace_rec.elimination_cap = 6 * static_cast<std::int64_t>(k) - 7;
    }
    if (report.admissible.empty()) {
      if (state.trace_on) state.trace.records.push_back(std::move(trace_rec));
      fail(ErrorCode::kEmptyCandidateSet, k, i, "no admissible swap vertex");
    }
    const Vertex v_i = selector.pick_candidate(report.admissible);
    revise_unchecked(state, i, v_i);
    if (state.trace_on) {
      trace_rec.chosen = v_i;
      trace_rec.w = rec.w[i - 1];
      trace_rec.v_prime = rec.v_prime[i - 1];
      trace_rec.w_prime = rec.w_prime[i - 1];
      state.trace.records.push_back(std::move(trace_rec));
    }
  }

  RainbowTree kth = finalize_kth(state);
  if (state.trace_on) {
    TraceRecord trace_rec;
    trace_rec.kind = TraceKind::kFinalize;
    trace_rec.k = static_cast<int>(k);
    trace_rec.i = static_cast<int>(k);
    trace_rec.root = rec.r_k;
    trace_rec.r_k = rec.r_k;
    trace_rec.w_k = rec.w_k;
    trace_rec.w = rec.w_k;
    trace_rec.w_prime = rec.w_prime.back();
    state.trace.records.push_back(std::move(trace_rec));
  }
  state.trees.push_back(std::move(kth));
  state.partial_kth.reset();

  // L_k is contained in L_{k-1} minus the anchors and swap vertices; keep
  // whatever is still a root-adjacent leaf in every tree.
  std::vector<Vertex> next;
  for (Vertex x : state.common_leaves) {
    if (x == rec.r_k || x == rec.w_k ||
        std::find(rec.v.begin(), rec.v.end(), x) != rec.v.end()) {
      continue;
    }
    if (std::all_of(state.trees.begin(), state.trees.end(),
                    [x](const RainbowTree& t) { return t.is_root_leaf(x); })) {
      next.push_back(x);
    }
  }
  if (next != intersect_root_leaves(state.trees)) {
    fail(ErrorCode::kLeafSetMismatch, k, 0,
         "incremental common leaf set differs from recomputation");
  }
  if (next.size() >= state.common_leaves.size()) {
    fail(ErrorCode::kLeafSetMismatch, k, 0, "common leaf set did not shrink");
  }
  state.common_leaves = std::move(next);
  check_structure(state.trees, m);
}

BuildResult build_forest(const EdgeColoring& coloring, SelectionPolicy policy,
                         bool trace_on) {
  Selector selector(policy);
  ConstructionState state = start_construction(coloring, selector, trace_on);
  const std::size_t rounds = omega(coloring.m());
  try {
    for (std::size_t k = 2; k <= rounds; ++k) step(state, selector);
  } catch (const Error& e) {
    throw ConstructionFailure(e, std::move(state.trace));
  }
  BuildResult result;
  result.forest.m = coloring.m();
  result.forest.trees = std::move(state.trees);
  result.forest.coloring_digest = coloring.digest();
  result.trace = std::move(state.trace);
  return result;
}

}  // namespace rainbow
