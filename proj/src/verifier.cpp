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

#include "rainbow/verifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rainbow {
namespace {

using PairSet = std::set<std::uint64_t>;

Vertex low_of(std::uint64_t key) {
  return Vertex(static_cast<std::uint32_t>(key & 0xffffffffu));
}
Vertex high_of(std::uint64_t key) {
  return Vertex(static_cast<std::uint32_t>(key >> 32));
}

// Largest psi with (3 psi)^2 <= 6m + 9, i.e. floor(sqrt(6m+9)/3), found by
// counting up rather than taking a square root.
std::size_t tree_count_for(std::size_t m) {
  std::size_t psi = 0;
  while (9 * (psi + 1) * (psi + 1) <= 6 * m + 9) ++psi;
  return psi;
}

std::string describe(std::uint64_t key) {
  std::ostringstream os;
  os << "{" << low_of(key) << ", " << high_of(key) << "}";
  return os.str();
}

std::vector<std::size_t> degrees(std::size_t n, const PairSet& pairs) {
  std::vector<std::size_t> deg(n, 0);
  for (std::uint64_t key : pairs) {
    ++deg[low_of(key).value()];
    ++deg[high_of(key).value()];
  }
  return deg;
}

// Vertices x with {root, x} an edge and deg(x) = 1.
std::vector<Vertex> root_leaves_of(std::size_t n, Vertex root,
                                   const PairSet& pairs) {
  const std::vector<std::size_t> deg = degrees(n, pairs);
  std::vector<Vertex> out;
  for (std::uint64_t key : pairs) {
    const Vertex a = low_of(key);
    const Vertex b = high_of(key);
    if (a == root && deg[b.value()] == 1) out.push_back(b);
    if (b == root && deg[a.value()] == 1) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool acyclic(std::size_t n, const PairSet& pairs) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&parent](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t key : pairs) {
    const std::uint32_t a = find(low_of(key).value());
    const std::uint32_t b = find(high_of(key).value());
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

PairSet star(std::size_t n, Vertex center) {
  PairSet out;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (Vertex(x) != center) out.insert(pair_key(center, Vertex(x)));
  }
  return out;
}

PairSet pairs_of(const RainbowTree& tree) {
  PairSet out;
  for (const ColoredEdge& e : tree.edges()) out.insert(pair_key(e));
  return out;
}

std::vector<std::uint64_t> intersection(const PairSet& a, const PairSet& b) {
  std::vector<std::uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Replay of one trace; collects failures instead of throwing.
class TraceReplay {
 public:
  TraceReplay(const ConstructionTrace& trace, std::size_t m)
      : trace_(trace), m_(m), n_(2 * m) {}

  TraceCheck run() {
    const auto& recs = trace_.records;
    if (trace_.m != m_) {
      failure("trace is for m = " + std::to_string(trace_.m) +
              ", expected " + std::to_string(m_));
    }
    if (recs.empty() || recs.front().kind != TraceKind::kBase ||
        recs.front().k != 1) {
      failure("trace must start with the base record");
      return finish();
    }
    if (recs.front().root.value() >= n_) {
      failure("base root out of range");
      return finish();
    }
    roots_.push_back(recs.front().root);
    trees_.push_back(star(n_, recs.front().root));

    std::size_t pos = 1;
    int k = 2;
    while (pos < recs.size()) {
      const std::size_t end = pos + static_cast<std::size_t>(k);
      if (end > recs.size()) {
        failure("round " + std::to_string(k) + " is incomplete");
        // Still check the records that are there, e.g. an empty candidate
        // set that aborted the run.
        replay_round(k, pos, recs.size());
        return finish();
      }
      if (!replay_round(k, pos, end)) return finish();
      pos = end;
      ++k;
    }
    if (trees_.size() != tree_count_for(m_)) {
      failure("trace builds " + std::to_string(trees_.size()) +
              " trees, expected " + std::to_string(tree_count_for(m_)));
    }
    return finish();
  }

 private:
  void failure(const std::string& what) { check_.failures.push_back(what); }

  void round_failure(int k, int i, const std::string& what) {
    std::ostringstream os;
    os << "round " << k;
    if (i > 0) os << ", tree " << i;
    os << ": " << what;
    failure(os.str());
  }

  TraceCheck finish() {
    for (std::size_t t = 0; t < trees_.size(); ++t) {
      check_.final_trees.push_back(
          {roots_[t], {trees_[t].begin(), trees_[t].end()}});
    }
    check_.pass = check_.failures.empty();
    return std::move(check_);
  }

  // Common root-adjacent leaves of the current trees.
  std::vector<Vertex> common_leaves() const {
    std::vector<Vertex> out = root_leaves_of(n_, roots_[0], trees_[0]);
    for (std::size_t t = 1; t < trees_.size(); ++t) {
      const std::vector<Vertex> leaves =
          root_leaves_of(n_, roots_[t], trees_[t]);
      std::vector<Vertex> next;
      std::set_intersection(out.begin(), out.end(), leaves.begin(),
                            leaves.end(), std::back_inserter(next));
      out = std::move(next);
    }
    return out;
  }

  bool in_range(Vertex x) const { return x.value() < n_; }

  // Removes pendant edge {center, leaf} and adds {leaf, target}.
  bool move_leaf(PairSet& pairs, Vertex center, Vertex leaf, Vertex target,
                 int k, int i, const char* what) {
    const std::vector<std::size_t> deg = degrees(n_, pairs);
    if (!pairs.contains(pair_key(center, leaf)) || deg[leaf.value()] != 1) {
      round_failure(k, i, std::string(what) + ": " + describe(pair_key(center, leaf)) +
                              " is not a pendant edge");
      return false;
    }
    pairs.erase(pair_key(center, leaf));
    if (leaf == target || !pairs.insert(pair_key(leaf, target)).second) {
      round_failure(k, i, std::string(what) + ": added edge " +
                              describe(pair_key(leaf, target)) +
                              " is degenerate");
      return false;
    }
    return true;
  }

  void expect_disjoint(const PairSet& a, const PairSet& b, int k, int i,
                       const std::string& what,
                       std::optional<std::uint64_t> allowed = std::nullopt) {
    for (std::uint64_t key : intersection(a, b)) {
      if (allowed && key == *allowed) continue;
      round_failure(k, i, what + " share " + describe(key));
    }
  }

  bool replay_round(int k, std::size_t begin, std::size_t end) {
    const auto& recs = trace_.records;
    const TraceRecord& first = recs[begin];
    const Vertex r_k = first.r_k;
    const Vertex w_k = first.w_k;
    const auto kk = static_cast<std::int64_t>(k);

    RoundSummary summary;
    summary.k = k;
    const std::vector<Vertex> leaves = common_leaves();
    summary.common_leaves = leaves.size();
    summary.leaf_bound = 2 * static_cast<std::int64_t>(m_) - 3 * kk * kk +
                         6 * kk - 1;
    summary.elimination_cap = 6 * kk - 7;
    if (static_cast<std::int64_t>(leaves.size()) < summary.leaf_bound) {
      round_failure(k, 0, "|L_{k-1}| = " + std::to_string(leaves.size()) +
                              " below bound " +
                              std::to_string(summary.leaf_bound));
    }
    if (!in_range(r_k) || !in_range(w_k) || r_k == w_k ||
        !std::binary_search(leaves.begin(), leaves.end(), r_k) ||
        !std::binary_search(leaves.begin(), leaves.end(), w_k)) {
      round_failure(k, 0, "anchors must be two distinct common leaves");
      check_.rounds.push_back(summary);
      return false;
    }
    std::vector<Vertex> lstar;
    for (Vertex x : leaves) {
      if (x != r_k && x != w_k) lstar.push_back(x);
    }
    summary.lstar = lstar.size();
    if (static_cast<std::int64_t>(lstar.size()) <= summary.elimination_cap) {
      round_failure(k, 0, "|L*| = " + std::to_string(lstar.size()) +
                              " does not exceed 6k - 7");
    }

    const std::vector<PairSet> previous = trees_;
    PairSet partial = star(n_, r_k);
    summary.min_admissible = n_;
    bool ok = true;

    for (std::size_t pos = begin; pos < end && ok; ++pos) {
      const TraceRecord& rec = recs[pos];
      const int i = static_cast<int>(pos - begin) + 1;
      if (rec.k != k || rec.i != i || rec.r_k != r_k || rec.w_k != w_k) {
        round_failure(k, i, "record out of sequence");
        ok = false;
        break;
      }
      if (i < k) {
        ok = replay_revision(rec, k, i, lstar, previous, partial, summary);
      } else {
        ok = replay_finalize(rec, k, partial);
      }
    }
    check_.rounds.push_back(summary);
    if (!ok || end - begin != static_cast<std::size_t>(k)) return false;

    roots_.push_back(r_k);
    trees_.push_back(std::move(partial));
    for (std::size_t a = 0; a < trees_.size(); ++a) {
      for (std::size_t b = a + 1; b < trees_.size(); ++b) {
        expect_disjoint(trees_[a], trees_[b], k, 0,
                        "trees " + std::to_string(a + 1) + " and " +
                            std::to_string(b + 1));
      }
    }
    return true;
  }

  bool replay_revision(const TraceRecord& rec, int k, int i,
                       const std::vector<Vertex>& lstar,
                       const std::vector<PairSet>& previous, PairSet& partial,
                       RoundSummary& summary) {
    if (rec.kind != TraceKind::kRevise) {
      round_failure(k, i, "expected a revise record");
      return false;
    }
    const Vertex r_i = roots_[i - 1];
    const Vertex r_k = rec.r_k;
    if (rec.root != r_i) round_failure(k, i, "root differs from replay");
    if (rec.candidates_before != lstar) {
      round_failure(k, i, "candidates_before differs from recomputed L*");
    }
    if (static_cast<std::int64_t>(rec.elimination_cap) != 6 * k - 7 ||
        rec.bound_rhs != summary.leaf_bound ||
        rec.bound_lhs != summary.common_leaves) {
      round_failure(k, i, "recorded bound fields differ from recomputation");
    }

    std::vector<Vertex> eliminated;
    for (const auto& list : rec.eliminated) {
      for (Vertex x : list) {
        if (!std::binary_search(lstar.begin(), lstar.end(), x)) {
          round_failure(k, i, "eliminated vertex outside L*");
        }
        eliminated.push_back(x);
      }
    }
    eliminated = sorted_unique(std::move(eliminated));
    std::vector<Vertex> expected_admissible;
    std::set_difference(lstar.begin(), lstar.end(), eliminated.begin(),
                        eliminated.end(),
                        std::back_inserter(expected_admissible));
    if (rec.admissible != expected_admissible) {
      round_failure(k, i, "admissible set is not L* minus the eliminations");
    }
    summary.min_admissible =
        std::min(summary.min_admissible, rec.admissible.size());
    summary.max_eliminated = std::max(summary.max_eliminated, eliminated.size());
    if (i == k - 1 &&
        static_cast<std::int64_t>(eliminated.size()) > 6 * k - 7) {
      round_failure(k, i, std::to_string(eliminated.size()) +
                              " vertices eliminated, more than 6k - 7");
    }
    if (rec.admissible.empty()) {
      round_failure(k, i, "empty candidate set");
      return false;
    }
    if (!rec.chosen || !std::binary_search(rec.admissible.begin(),
                                           rec.admissible.end(),
                                           *rec.chosen)) {
      round_failure(k, i, "chosen vertex is not admissible");
      return false;
    }
    const Vertex v_i = *rec.chosen;
    for (Vertex x : {rec.w, rec.v_prime, rec.w_prime}) {
      if (!in_range(x)) {
        round_failure(k, i, "vertex out of range");
        return false;
      }
    }

    // T_i^k = T_i^{k-1} - r_i r_k - r_i v_i + r_k w_i + v_i v'_i.
    PairSet& tree = trees_[i - 1];
    for (Vertex leaf : {r_k, v_i}) {
      const std::vector<std::size_t> deg = degrees(n_, tree);
      if (!tree.contains(pair_key(r_i, leaf)) || deg[leaf.value()] != 1) {
        round_failure(k, i, describe(pair_key(r_i, leaf)) +
                                " is not a pendant root edge");
        return false;
      }
    }
    tree.erase(pair_key(r_i, r_k));
    tree.erase(pair_key(r_i, v_i));
    for (std::uint64_t key : {pair_key(r_k, rec.w), pair_key(v_i, rec.v_prime)}) {
      if (low_of(key) == high_of(key) || !tree.insert(key).second) {
        round_failure(k, i, "added edge " + describe(key) + " is degenerate");
        return false;
      }
    }
    if (tree.size() != n_ - 1 || !acyclic(n_, tree)) {
      round_failure(k, i, "revised tree is not a spanning tree");
    }
    // P1-P6.
    for (int a = 1; a < i; ++a) {
      expect_disjoint(tree, trees_[a - 1], k, i,
                      "T_i^k and T_" + std::to_string(a) + "^k");
    }
    for (int b = i + 1; b < k; ++b) {
      expect_disjoint(tree, previous[b - 1], k, i,
                      "T_i^k and T_" + std::to_string(b) + "^{k-1}");
    }

    // T_k^k(i) = T_k^k(i-1) - r_k w_i + w_i w'_i.
    if (!move_leaf(partial, r_k, rec.w, rec.w_prime, k, i, "T_k^k(i)")) {
      return false;
    }
    if (partial.size() != n_ - 1 || !acyclic(n_, partial)) {
      round_failure(k, i, "T_k^k(i) has a cycle");  // P12
    }
    // P7, P9, P10.
    for (int a = 1; a <= i; ++a) {
      expect_disjoint(partial, trees_[a - 1], k, i,
                      "T_k^k(i) and T_" + std::to_string(a) + "^k");
    }
    // P8: only r_k r_b, which is removed when tree b is revised.
    for (int b = i + 1; b < k; ++b) {
      expect_disjoint(partial, previous[b - 1], k, i,
                      "T_k^k(i) and T_" + std::to_string(b) + "^{k-1}",
                      pair_key(r_k, roots_[b - 1]));
    }
    return true;
  }

  bool replay_finalize(const TraceRecord& rec, int k, PairSet& partial) {
    if (rec.kind != TraceKind::kFinalize || rec.root != rec.r_k ||
        rec.w != rec.w_k || !in_range(rec.w_prime)) {
      round_failure(k, k, "malformed finalize record");
      return false;
    }
    if (!move_leaf(partial, rec.r_k, rec.w_k, rec.w_prime, k, k, "T_k^k")) {
      return false;
    }
    if (partial.size() != n_ - 1 || !acyclic(n_, partial)) {
      round_failure(k, k, "T_k^k has a cycle");  // P13
    }
    // P11.
    for (int i = 1; i < k; ++i) {
      if (trees_[i - 1].contains(pair_key(rec.w_k, rec.w_prime))) {
        round_failure(k, k, "w_k w'_k lies in T_" + std::to_string(i) + "^k");
      }
    }
    return true;
  }

  const ConstructionTrace& trace_;
  std::size_t m_;
  std::size_t n_;
  std::vector<Vertex> roots_;
  std::vector<PairSet> trees_;
  TraceCheck check_;
};

nlohmann::ordered_json strings(const std::vector<std::string>& xs) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

}  // namespace

TreeCheck verify_rainbow_spanning_tree(const EdgeColoring& coloring,
                                       const RainbowTree& tree) {
  const std::size_t n = coloring.vertex_count();
  TreeCheck out;
  out.edge_count = tree.edges().size();
  out.edge_count_ok = out.edge_count == n - 1;
  if (!out.edge_count_ok) {
    out.problems.push_back("has " + std::to_string(out.edge_count) +
                           " edges, expected " + std::to_string(n - 1));
  }

  out.endpoints_valid = tree.root().value() < n;
  out.colors_match = true;
  PairSet pairs;
  std::map<std::uint32_t, std::size_t> color_uses;
  for (const ColoredEdge& e : tree.edges()) {
    if (e.u.value() >= n || e.v.value() >= n || e.u == e.v ||
        !pairs.insert(pair_key(e)).second) {
      out.endpoints_valid = false;
      out.problems.push_back("bad or repeated edge " +
                             describe(pair_key(e)));
      continue;
    }
    ++color_uses[e.color.value()];
    if (coloring.color_of(e.u, e.v) != e.color) {
      out.colors_match = false;
      out.problems.push_back("edge " + describe(pair_key(e)) +
                             " stored with color " +
                             std::to_string(e.color.value()) +
                             ", coloring says " +
                             std::to_string(coloring.color_of(e.u, e.v).value()));
    }
  }
  out.rainbow = std::all_of(color_uses.begin(), color_uses.end(),
                            [](const auto& kv) { return kv.second == 1; });
  if (!out.rainbow) out.problems.push_back("a color repeats");

  out.acyclic = acyclic(n, pairs);
  if (!out.acyclic) out.problems.push_back("contains a cycle");

  if (out.endpoints_valid || tree.root().value() < n) {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::uint64_t key : pairs) {
      adj[low_of(key).value()].push_back(high_of(key).value());
      adj[high_of(key).value()].push_back(low_of(key).value());
    }
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack;
    const std::uint32_t start = tree.root().value() < n ? tree.root().value() : 0;
    stack.push_back(start);
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    out.connected = reached == n;
  }
  if (!out.connected) out.problems.push_back("does not span K_n");

  out.pass = out.edge_count_ok && out.endpoints_valid && out.colors_match &&
             out.rainbow && out.acyclic && out.connected;
  return out;
}

DisjointCheck verify_edge_disjoint(const Forest& forest) {
  DisjointCheck out;
  const std::size_t count = forest.trees.size();
  out.shared.assign(count, std::vector<std::size_t>(count, 0));
  std::map<std::uint64_t, std::vector<std::size_t>> owners;
  for (std::size_t t = 0; t < count; ++t) {
    PairSet pairs;
    for (const ColoredEdge& e : forest.trees[t].edges()) {
      ++out.total_edges;
      if (pairs.insert(pair_key(e)).second) owners[pair_key(e)].push_back(t);
    }
  }
  out.union_size = owners.size();
  bool clean = true;
  for (const auto& [key, who] : owners) {
    for (std::size_t a = 0; a < who.size(); ++a) {
      for (std::size_t b = a + 1; b < who.size(); ++b) {
        ++out.shared[who[a]][who[b]];
        ++out.shared[who[b]][who[a]];
        clean = false;
      }
    }
  }
  out.pass = clean && out.union_size == out.total_edges;
  return out;
}

StructureCheck verify_structure_f(const Forest& forest, std::size_t psi,
                                  std::size_t m) {
  StructureCheck out;
  out.psi = psi;
  const std::size_t n = 2 * m;
  bool ok = true;
  if (forest.trees.size() != psi) {
    out.problems.push_back("forest has " +
                           std::to_string(forest.trees.size()) +
                           " trees, expected " + std::to_string(psi));
    ok = false;
  }
  std::set<Vertex> roots;
  for (const RainbowTree& t : forest.trees) roots.insert(t.root());
  out.roots_distinct = roots.size() == forest.trees.size();
  if (!out.roots_distinct) {
    out.problems.push_back("roots are not distinct");
    ok = false;
  }

  const auto top = static_cast<std::int64_t>(2 * m - 1);
  const auto p = static_cast<std::int64_t>(psi);
  for (std::size_t idx = 0; idx < forest.trees.size(); ++idx) {
    const RainbowTree& t = forest.trees[idx];
    const auto i = static_cast<std::int64_t>(idx + 1);
    RootCheck rc;
    rc.root = t.root();
    rc.expected_degree = i == 1 ? top - 2 * (p - 1) : top - i - 2 * (p - i);
    rc.leaf_lower_bound = std::max<std::int64_t>(
        0, i == 1 ? top - 4 * (p - 1) : top - 2 * i - 4 * (p - i));
    if (t.root().value() < n) {
      PairSet pairs;
      bool in_range = true;
      for (const ColoredEdge& e : t.edges()) {
        if (e.u.value() >= n || e.v.value() >= n) {
          in_range = false;
          continue;
        }
        pairs.insert(pair_key(e));
      }
      rc.actual_degree = static_cast<std::int64_t>(
          degrees(n, pairs)[t.root().value()]);
      rc.actual_leaves = static_cast<std::int64_t>(
          root_leaves_of(n, t.root(), pairs).size());
      rc.pass = in_range && rc.actual_degree == rc.expected_degree &&
                rc.actual_leaves >= rc.leaf_lower_bound;
    }
    if (!rc.pass) {
      std::ostringstream os;
      os << "tree " << i << " root " << rc.root << ": degree "
         << rc.actual_degree << " (want " << rc.expected_degree
         << "), root leaves " << rc.actual_leaves << " (want >= "
         << rc.leaf_lower_bound << ")";
      out.problems.push_back(os.str());
      ok = false;
    }
    out.trees.push_back(rc);
  }
  out.pass = ok;
  return out;
}

TraceCheck verify_trace_bounds(const ConstructionTrace& trace, std::size_t m) {
  return TraceReplay(trace, m).run();
}

VerificationReport verify_all(const EdgeColoring& coloring,
                              const Forest& forest,
                              const ConstructionTrace* trace) {
  VerificationReport report;
  const std::size_t m = coloring.m();
  report.m_matches = forest.m == m;
  report.digest_matches =
      forest.coloring_digest.empty() || forest.coloring_digest == coloring.digest();
  report.count_matches_omega = forest.trees.size() == tree_count_for(m);
  for (const RainbowTree& t : forest.trees) {
    report.trees.push_back(verify_rainbow_spanning_tree(coloring, t));
  }
  report.disjoint = verify_edge_disjoint(forest);
  report.structure = verify_structure_f(forest, forest.trees.size(), m);
  if (trace != nullptr) {
    report.trace = verify_trace_bounds(*trace, m);
    const auto& replayed = report.trace->final_trees;
    report.trace_matches_forest = replayed.size() == forest.trees.size();
    for (std::size_t t = 0; report.trace_matches_forest && t < replayed.size();
         ++t) {
      const PairSet pairs = pairs_of(forest.trees[t]);
      report.trace_matches_forest =
          replayed[t].root == forest.trees[t].root() &&
          std::vector<std::uint64_t>(pairs.begin(), pairs.end()) ==
              replayed[t].pairs;
    }
  }
  report.pass = report.m_matches && report.digest_matches &&
                report.count_matches_omega && !report.trees.empty() &&
                std::all_of(report.trees.begin(), report.trees.end(),
                            [](const TreeCheck& c) { return c.pass; }) &&
                report.disjoint.pass && report.structure.pass &&
                (!report.trace || report.trace->pass) &&
                report.trace_matches_forest;
  return report;
}

std::string VerificationReport::to_json() const {
  using Json = nlohmann::ordered_json;
  Json doc;
  doc["pass"] = pass;
  doc["m_matches"] = m_matches;
  doc["digest_matches"] = digest_matches;
  doc["count_matches_omega"] = count_matches_omega;
  Json tree_list = Json::array();
  for (const TreeCheck& t : trees) {
    Json j;
    j["pass"] = t.pass;
    j["edge_count"] = t.edge_count;
    j["colors_match"] = t.colors_match;
    j["rainbow"] = t.rainbow;
    j["acyclic"] = t.acyclic;
    j["spanning"] = t.connected;
    j["problems"] = strings(t.problems);
    tree_list.push_back(j);
  }
  doc["trees"] = tree_list;
  doc["disjoint"] = {{"pass", disjoint.pass},
                     {"total_edges", disjoint.total_edges},
                     {"union_size", disjoint.union_size},
                     {"shared", disjoint.shared}};
  Json roots = Json::array();
  for (const RootCheck& r : structure.trees) {
    roots.push_back({{"root", r.root.value()},
                     {"expected_degree", r.expected_degree},
                     {"actual_degree", r.actual_degree},
                     {"leaf_lower_bound", r.leaf_lower_bound},
                     {"actual_leaves", r.actual_leaves},
                     {"pass", r.pass}});
  }
  doc["structure"] = {{"pass", structure.pass},
                      {"psi", structure.psi},
                      {"roots_distinct", structure.roots_distinct},
                      {"trees", roots},
                      {"problems", strings(structure.problems)}};
  if (trace) {
    Json rounds = Json::array();
    for (const RoundSummary& r : trace->rounds) {
      rounds.push_back({{"k", r.k},
                        {"common_leaves", r.common_leaves},
                        {"leaf_bound", r.leaf_bound},
                        {"lstar", r.lstar},
                        {"elimination_cap", r.elimination_cap},
                        {"min_admissible", r.min_admissible},
                        {"max_eliminated", r.max_eliminated}});
    }
    doc["trace"] = {{"pass", trace->pass},
                    {"matches_forest", trace_matches_forest},
                    {"rounds", rounds},
                    {"failures", strings(trace->failures)}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace rainbow
