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

#ifndef RAINBOW_SRC_ORACLE_SEARCH_HPP_
#define RAINBOW_SRC_ORACLE_SEARCH_HPP_

// Search kernels shared by the serial and OpenMP oracles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/error.hpp"
#include "rainbow/forest.hpp"

namespace rainbow::oracle_detail {

inline void check_cap(const EdgeColoring& coloring, std::size_t cap,
                      const char* what) {
  if (coloring.vertex_count() > cap) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::string(what) + " on " +
                    std::to_string(coloring.vertex_count()) +
                    " vertices exceeds the cap of " + std::to_string(cap));
  }
}

// Union-find without path compression so unions can be undone.
class RollbackSets {
 public:
  explicit RollbackSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  // Returns false, changing nothing, when a and b are already joined.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void undo() {
    const std::uint32_t b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> history_;
};

// A rainbow spanning tree uses every color exactly once, so trees are
// enumerated by picking one edge from each color class in turn and
// abandoning any pick that closes a cycle.
class RainbowEnumerator {
 public:
  explicit RainbowEnumerator(const EdgeColoring& coloring)
      : n_(coloring.vertex_count()), sets_(n_) {
    for (std::uint32_t c = 0; c < coloring.color_count(); ++c) {
      classes_.push_back(coloring.color_class(Color(c)));
    }
  }

  std::size_t first_class_size() const { return classes_.front().size(); }

  // Enumerates the trees whose color-0 edge is classes_[0][first].
  void run_from(std::size_t first,
                std::vector<std::vector<ColoredEdge>>& out) {
    const ColoredEdge& e = classes_[0][first];
    sets_.unite(e.u.value(), e.v.value());
    chosen_.push_back(e);
    descend(1, out);
    chosen_.pop_back();
    sets_.undo();
  }

 private:
  void descend(std::size_t color,
               std::vector<std::vector<ColoredEdge>>& out) {
    if (color == classes_.size()) {
      std::vector<ColoredEdge> tree = chosen_;
      std::sort(tree.begin(), tree.end());
      out.push_back(std::move(tree));
      return;
    }
    for (const ColoredEdge& e : classes_[color]) {
      if (!sets_.unite(e.u.value(), e.v.value())) continue;
      chosen_.push_back(e);
      descend(color + 1, out);
      chosen_.pop_back();
      sets_.undo();
    }
  }

  std::size_t n_;
  RollbackSets sets_;
  std::vector<std::vector<ColoredEdge>> classes_;
  std::vector<ColoredEdge> chosen_;
};

inline std::vector<RainbowTree> to_trees(
    std::size_t n, std::vector<std::vector<ColoredEdge>> edge_lists) {
  std::sort(edge_lists.begin(), edge_lists.end());
  std::vector<RainbowTree> out;
  out.reserve(edge_lists.size());
  for (auto& edges : edge_lists) {
    out.push_back(RainbowTree::unchecked(n, Vertex(0), std::move(edges)));
  }
  return out;
}

inline std::uint64_t edge_bit(const ColoredEdge& e) {
  const std::uint32_t lo = std::min(e.u.value(), e.v.value());
  const std::uint32_t hi = std::max(e.u.value(), e.v.value());
  return std::uint64_t{1} << (hi * (hi - 1) / 2 + lo);
}

inline std::vector<std::uint64_t> edge_masks(
    const std::vector<RainbowTree>& trees) {
  std::vector<std::uint64_t> masks;
  masks.reserve(trees.size());
  for (const RainbowTree& t : trees) {
    std::uint64_t mask = 0;
    for (const ColoredEdge& e : t.edges()) mask |= edge_bit(e);
    masks.push_back(mask);
  }
  return masks;
}

// Branch and bound over trees in index order. `cands` holds the trees that
// are disjoint from `used` and come after the last one taken.
class PackingSearch {
 public:
  PackingSearch(const std::vector<std::uint64_t>& masks, std::size_t m)
      : masks_(masks), per_tree_(2 * m - 1), edge_total_(m * (2 * m - 1)),
        limit_(m) {}

  std::size_t limit() const { return limit_; }

  // Best packing that contains tree `first` and otherwise only later trees.
  std::size_t best_with(std::size_t first, std::size_t floor) {
    best_ = floor;
    std::vector<std::uint32_t> cands;
    for (std::size_t j = first + 1; j < masks_.size(); ++j) {
      if ((masks_[j] & masks_[first]) == 0) {
        cands.push_back(static_cast<std::uint32_t>(j));
      }
    }
    descend(cands, masks_[first], 1);
    return best_;
  }

 private:
  void descend(const std::vector<std::uint32_t>& cands, std::uint64_t used,
               std::size_t depth) {
    best_ = std::max(best_, depth);
    if (best_ >= limit_) return;
    const std::size_t free_edges =
        edge_total_ - static_cast<std::size_t>(std::popcount(used));
    const std::size_t room = std::min(cands.size(), free_edges / per_tree_);
    if (depth + room <= best_) return;
    std::vector<std::uint32_t> next;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const std::uint64_t mask = masks_[cands[a]];
      next.clear();
      for (std::size_t b = a + 1; b < cands.size(); ++b) {
        if ((masks_[cands[b]] & mask) == 0) next.push_back(cands[b]);
      }
      descend(next, used | mask, depth + 1);
      if (best_ >= limit_) return;
      if (depth + (cands.size() - a - 1) <= best_) return;
    }
  }

  const std::vector<std::uint64_t>& masks_;
  std::size_t per_tree_;
  std::size_t edge_total_;
  std::size_t limit_;
  std::size_t best_ = 0;
};

}  // namespace rainbow::oracle_detail

#endif  // RAINBOW_SRC_ORACLE_SEARCH_HPP_
