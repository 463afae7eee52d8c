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

#ifndef RAINBOW_COLORING_HPP_
#define RAINBOW_COLORING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

// A proper (2m-1)-edge-coloring of K_{2m}. Every color class is a perfect
// matching, so each (color, vertex) pair has exactly one partner.
//
// Instances only come out of validate_proper (directly or through the
// generators and the parser) and are immutable afterwards.
class EdgeColoring {
 public:
  std::size_t m() const { return m_; }
  std::size_t vertex_count() const { return 2 * m_; }
  std::size_t color_count() const { return 2 * m_ - 1; }

  // Throws kSelfLoop when u == v.
  Color color_of(Vertex u, Vertex v) const;

  // The unique w with color_of(v, w) == c.
  Vertex partner(Color c, Vertex v) const {
    return Vertex(partner_[c.value() * vertex_count() + v.value()]);
  }

  // All m(2m-1) edges in canonical (u, v) order.
  std::vector<ColoredEdge> edges() const;

  // The m edges of one color class, each with u < v, ordered by u.
  std::vector<ColoredEdge> color_class(Color c) const;

  // FNV-1a of the canonical serialization, as 16 hex digits.
  std::string digest() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  friend EdgeColoring validate_proper(std::span<const ColoredEdge>,
                                      std::size_t);

  EdgeColoring() = default;

  std::size_t m_ = 0;
  std::vector<std::uint32_t> table_;    // n * n, diagonal unused
  std::vector<std::uint32_t> partner_;  // (2m-1) * n
};

// Builds the coloring from one entry per unordered pair of the 2m vertices.
// Errors: kVertexOutOfRange, kSelfLoop, kDuplicatePair, kColorOutOfRange,
// kMissingPair, kAdjacentClash.
EdgeColoring validate_proper(std::span<const ColoredEdge> raw_table,
                             std::size_t m);

// Round-robin 1-factorization: vertices 0..2m-2 on a cycle, 2m-1 fixed.
// Color c is {2m-1, c} plus {c+i, c-i} (mod 2m-1) for i = 1..m-1.
EdgeColoring round_robin(std::size_t m);

// color'(s[u], s[v]) = p[color(u, v)]. Throws kNotAPermutation.
EdgeColoring permute_coloring(const EdgeColoring& coloring,
                              std::span<const std::uint32_t> vertex_perm,
                              std::span<const std::uint32_t> color_perm);

// Round-robin relabelled by seeded random vertex and color permutations.
EdgeColoring permuted_round_robin(std::size_t m, std::uint64_t seed);

// JSON document {"n": 2m, "edges": [[u, v, c], ...]}. Parsing validates
// properness; serialization is canonical (edges sorted by (u, v)).
EdgeColoring parse_coloring(std::string_view text);
std::string serialize_coloring(const EdgeColoring& coloring);

}  // namespace rainbow

#endif  // RAINBOW_COLORING_HPP_
