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

#include "rainbow/forest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "rainbow/error.hpp"

namespace rainbow {
namespace {

// Plain union-find; only used to confirm acyclicity of tree candidates.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

std::string edge_string(const ColoredEdge& e) {
  std::ostringstream os;
  os << "{" << e.u << ", " << e.v << "} color " << e.color;
  return os.str();
}

void append_edges(std::ostringstream& os, std::span<const ColoredEdge> edges,
                  const char* indent) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << (i == 0 ? "\n" : ",\n") << indent << "[" << edges[i].u << ", "
       << edges[i].v << ", " << edges[i].color << "]";
  }
}

}  // namespace

RainbowTree::RainbowTree(std::size_t vertex_count, Vertex root,
                         std::vector<ColoredEdge> edges)
    : vertex_count_(vertex_count),
      root_(root),
      edges_(std::move(edges)),
      adjacency_(vertex_count),
      color_edge_(vertex_count > 0 ? vertex_count - 1 : 0, -1) {
  for (ColoredEdge& e : edges_) e = e.canonical();
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const ColoredEdge& e = edges_[i];
    if (e.u.value() < vertex_count && e.v.value() < vertex_count &&
        e.u != e.v) {
      adjacency_[e.u.value()].push_back(e.v);
      adjacency_[e.v.value()].push_back(e.u);
    }
    if (e.color.value() < color_edge_.size() &&
        color_edge_[e.color.value()] < 0) {
      color_edge_[e.color.value()] = static_cast<std::int32_t>(i);
    }
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  if (root_.value() < vertex_count) root_leaves_ = recompute_root_leaves();
}

RainbowTree RainbowTree::unchecked(std::size_t vertex_count, Vertex root,
                                   std::vector<ColoredEdge> edges) {
  return RainbowTree(vertex_count, root, std::move(edges));
}

RainbowTree RainbowTree::from_edges(std::size_t vertex_count, Vertex root,
                                    std::vector<ColoredEdge> edges) {
  if (vertex_count < 2 || root.value() >= vertex_count) {
    throw Error(ErrorCode::kVertexOutOfRange, "root outside vertex set");
  }
  if (edges.size() != vertex_count - 1) {
    throw Error(ErrorCode::kNotSpanningTree,
                "expected " + std::to_string(vertex_count - 1) +
                    " edges, got " + std::to_string(edges.size()));
  }
  DisjointSets sets(vertex_count);
  std::vector<bool> color_used(vertex_count - 1, false);
  for (const ColoredEdge& e : edges) {
    if (e.u.value() >= vertex_count || e.v.value() >= vertex_count) {
      throw Error(ErrorCode::kVertexOutOfRange, edge_string(e));
    }
    if (e.u == e.v) throw Error(ErrorCode::kSelfLoop, edge_string(e));
    if (e.color.value() >= vertex_count - 1 || color_used[e.color.value()]) {
      throw Error(ErrorCode::kColorClash, "repeated or invalid color on " +
                                              edge_string(e));
    }
    color_used[e.color.value()] = true;
    if (!sets.unite(e.u.value(), e.v.value())) {
      throw Error(ErrorCode::kCycleDetected, "edge " + edge_string(e) +
                                                 " closes a cycle");
    }
  }
  return RainbowTree(vertex_count, root, std::move(edges));
}

bool RainbowTree::contains(Vertex a, Vertex b) const {
  if (a.value() >= vertex_count_) return false;
  const auto& list = adjacency_[a.value()];
  return std::binary_search(list.begin(), list.end(), b);
}

std::optional<ColoredEdge> RainbowTree::find_color(Color c) const {
  if (c.value() >= color_edge_.size() || color_edge_[c.value()] < 0) {
    return std::nullopt;
  }
  return edges_[color_edge_[c.value()]];
}

bool RainbowTree::is_root_leaf(Vertex x) const {
  return std::binary_search(root_leaves_.begin(), root_leaves_.end(), x);
}

std::vector<Vertex> RainbowTree::recompute_root_leaves() const {
  std::vector<Vertex> out;
  for (Vertex x : adjacency_[root_.value()]) {
    if (adjacency_[x.value()].size() == 1) out.push_back(x);
  }
  return out;
}

void RainbowTree::check_consistency() const {
  if (root_leaves_ != recompute_root_leaves()) {
    throw Error(ErrorCode::kLeafSetMismatch,
                "maintained root-leaf set differs from recomputation");
  }
  std::size_t indexed = 0;
  for (std::size_t c = 0; c < color_edge_.size(); ++c) {
    if (color_edge_[c] < 0) continue;
    ++indexed;
    if (edges_[color_edge_[c]].color.value() != c) {
      throw Error(ErrorCode::kColorClash, "color index out of sync");
    }
  }
  if (indexed != edges_.size()) {
    throw Error(ErrorCode::kColorClash, "tree repeats a color");
  }
}

RainbowTree base_star(const EdgeColoring& coloring, Vertex r) {
  const std::size_t n = coloring.vertex_count();
  if (r.value() >= n) {
    throw Error(ErrorCode::kVertexOutOfRange, "star center outside K_n");
  }
  std::vector<ColoredEdge> edges;
  edges.reserve(n - 1);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (Vertex(x) != r) {
      edges.push_back({r, Vertex(x), coloring.color_of(r, Vertex(x))});
    }
  }
  return RainbowTree::from_edges(n, r, std::move(edges));
}

RainbowTree apply_swap(const EdgeColoring& coloring, const RainbowTree& tree,
                       Vertex r, Vertex y, Vertex v, Vertex w,
                       Vertex v_prime) {
  std::ostringstream where;
  where << "swap [" << r << "; " << y << ", " << v << "; " << w << ", "
        << v_prime << "]";
  if (r != tree.root()) {
    throw Error(ErrorCode::kNotPendant, where.str() + ": " +
                                            "r is not the tree root");
  }
  if (y == v) {
    throw Error(ErrorCode::kDegenerateSwap, where.str() + ": y == v");
  }
  for (Vertex leaf : {y, v}) {
    if (!tree.is_root_leaf(leaf)) {
      throw Error(ErrorCode::kNotPendant,
                  where.str() + ": " + std::to_string(leaf.value()) +
                      " is not a leaf adjacent to the root");
    }
  }
  if (w == r || w == y || v_prime == r || v_prime == v ||
      (w == v && v_prime == y)) {
    throw Error(ErrorCode::kDegenerateSwap, where.str());
  }

  const ColoredEdge added_yw{y, w, coloring.color_of(y, w)};
  const ColoredEdge added_vv{v, v_prime, coloring.color_of(v, v_prime)};
  std::vector<ColoredEdge> edges;
  edges.reserve(tree.edges().size());
  for (const ColoredEdge& e : tree.edges()) {
    const std::uint64_t key = pair_key(e);
    if (key == pair_key(r, y) || key == pair_key(r, v)) continue;
    if (key == pair_key(added_yw) || key == pair_key(added_vv)) {
      throw Error(ErrorCode::kDegenerateSwap,
                  where.str() + ": added edge already present");
    }
    edges.push_back(e);
  }
  edges.push_back(added_yw);
  edges.push_back(added_vv);

  std::vector<bool> color_used(coloring.color_count(), false);
  DisjointSets sets(tree.vertex_count());
  for (const ColoredEdge& e : edges) {
    if (color_used[e.color.value()]) {
      throw Error(ErrorCode::kColorClash,
                  where.str() + ": color " +
                      std::to_string(e.color.value()) + " repeats");
    }
    color_used[e.color.value()] = true;
    if (!sets.unite(e.u.value(), e.v.value())) {
      throw Error(ErrorCode::kCycleDetected, where.str());
    }
  }

  RainbowTree out(tree.vertex_count(), tree.root(), std::move(edges));
  // y and v lose their root edge; w and v' gain an edge, so none of the four
  // can be a root-adjacent leaf afterwards and nothing else changes.
  std::vector<Vertex> leaves;
  for (Vertex x : tree.root_leaves()) {
    if (x != y && x != v && x != w && x != v_prime) leaves.push_back(x);
  }
  out.root_leaves_ = std::move(leaves);
  out.check_consistency();
  return out;
}

ColoredEdge tree_edge_of_color(const RainbowTree& tree, Color c) {
  std::optional<ColoredEdge> e = tree.find_color(c);
  if (!e) {
    throw Error(ErrorCode::kColorClash,
                "tree has no edge of color " + std::to_string(c.value()));
  }
  return *e;
}

std::vector<Vertex> Forest::roots() const {
  std::vector<Vertex> out;
  out.reserve(trees.size());
  for (const RainbowTree& t : trees) out.push_back(t.root());
  return out;
}

std::string serialize_forest(const Forest& forest) {
  std::ostringstream os;
  os << "{\"m\": " << forest.m << ", \"coloring_digest\": \""
     << forest.coloring_digest << "\", \"trees\": [";
  for (std::size_t t = 0; t < forest.trees.size(); ++t) {
    const RainbowTree& tree = forest.trees[t];
    os << (t == 0 ? "\n" : ",\n") << "  {\"root\": " << tree.root()
       << ", \"edges\": [";
    append_edges(os, tree.edges(), "    ");
    os << "\n  ]}";
  }
  os << "\n]}\n";
  return os.str();
}

Forest parse_forest(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSyntaxError, e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("trees") ||
      !doc["m"].is_number_unsigned() || !doc["trees"].is_array()) {
    throw Error(ErrorCode::kSchemaError,
                "forest document needs integer \"m\" and array \"trees\"");
  }
  Forest forest;
  forest.m = doc["m"].get<std::size_t>();
  if (forest.m == 0 || forest.m > (1u << 15)) {
    throw Error(ErrorCode::kSchemaError, "\"m\" out of range");
  }
  if (doc.contains("coloring_digest")) {
    if (!doc["coloring_digest"].is_string()) {
      throw Error(ErrorCode::kSchemaError,
                  "\"coloring_digest\" must be a string");
    }
    forest.coloring_digest = doc["coloring_digest"].get<std::string>();
  }
  const std::size_t n = 2 * forest.m;
  for (const nlohmann::json& entry : doc["trees"]) {
    if (!entry.is_object() || !entry.contains("root") ||
        !entry.contains("edges") || !entry["root"].is_number_unsigned() ||
        !entry["edges"].is_array()) {
      throw Error(ErrorCode::kSchemaError,
                  "tree entries need integer \"root\" and array \"edges\"");
    }
    const auto root = entry["root"].get<std::uint64_t>();
    if (root >= n) {
      throw Error(ErrorCode::kSchemaError, "tree root outside K_n");
    }
    std::vector<ColoredEdge> edges;
    for (const nlohmann::json& e : entry["edges"]) {
      if (!e.is_array() || e.size() != 3 ||
          !std::all_of(e.begin(), e.end(), [n](const nlohmann::json& x) {
            return x.is_number_unsigned() && x.get<std::uint64_t>() < n;
          })) {
        throw Error(ErrorCode::kSchemaError,
                    "tree edges must be [u, v, c] with entries below n");
      }
      edges.push_back({Vertex(e[0].get<std::uint32_t>()),
                       Vertex(e[1].get<std::uint32_t>()),
                       Color(e[2].get<std::uint32_t>())});
    }
    forest.trees.push_back(RainbowTree::unchecked(
        n, Vertex(static_cast<std::uint32_t>(root)), std::move(edges)));
  }
  return forest;
}

std::string forest_to_dot(const Forest& forest) {
  std::ostringstream os;
  for (std::size_t t = 0; t < forest.trees.size(); ++t) {
    const RainbowTree& tree = forest.trees[t];
    os << "graph T" << (t + 1) << " {\n";
    os << "  label=\"T" << (t + 1) << " root " << tree.root() << "\";\n";
    os << "  " << tree.root() << " [shape=doublecircle];\n";
    for (const ColoredEdge& e : tree.edges()) {
      os << "  " << e.u << " -- " << e.v << " [label=\"" << e.color
         << "\"];\n";
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace rainbow
