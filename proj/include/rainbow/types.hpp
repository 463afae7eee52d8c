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

#ifndef RAINBOW_TYPES_HPP_
#define RAINBOW_TYPES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <utility>

namespace rainbow {

// Index type that cannot be silently mixed with other index kinds.
template <typename Tag>
class StrongIndex {
 public:
  constexpr StrongIndex() = default;
  constexpr explicit StrongIndex(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }

  friend constexpr auto operator<=>(const StrongIndex&,
                                    const StrongIndex&) = default;

  friend std::ostream& operator<<(std::ostream& os, StrongIndex index) {
    return os << index.value_;
  }

 private:
  std::uint32_t value_ = 0;
};

struct VertexTag {};
struct ColorTag {};

// Vertex of K_{2m}, in [0, 2m-1].
using Vertex = StrongIndex<VertexTag>;
// Color of a (2m-1)-edge-coloring, in [0, 2m-2].
using Color = StrongIndex<ColorTag>;

struct ColoredEdge {
  Vertex u;
  Vertex v;
  Color color;

  // Same edge with u < v.
  constexpr ColoredEdge canonical() const {
    return u < v ? *this : ColoredEdge{v, u, color};
  }
  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return u == x ? v : u; }

  friend constexpr bool operator==(const ColoredEdge& a,
                                   const ColoredEdge& b) {
    const ColoredEdge ca = a.canonical();
    const ColoredEdge cb = b.canonical();
    return ca.u == cb.u && ca.v == cb.v && ca.color == cb.color;
  }
  // Orders canonical edges lexicographically by (u, v, color).
  friend constexpr bool operator<(const ColoredEdge& a, const ColoredEdge& b) {
    const ColoredEdge ca = a.canonical();
    const ColoredEdge cb = b.canonical();
    if (ca.u != cb.u) return ca.u < cb.u;
    if (ca.v != cb.v) return ca.v < cb.v;
    return ca.color < cb.color;
  }
};

// Unordered vertex pair packed into one integer, for edge-set arithmetic.
constexpr std::uint64_t pair_key(Vertex a, Vertex b) {
  const std::uint64_t lo = a < b ? a.value() : b.value();
  const std::uint64_t hi = a < b ? b.value() : a.value();
  return (hi << 32) | lo;
}

constexpr std::uint64_t pair_key(const ColoredEdge& e) {
  return pair_key(e.u, e.v);
}

}  // namespace rainbow

template <typename Tag>
struct std::hash<rainbow::StrongIndex<Tag>> {
  std::size_t operator()(rainbow::StrongIndex<Tag> index) const noexcept {
    return std::hash<std::uint32_t>{}(index.value());
  }
};

template <>
struct std::hash<rainbow::ColoredEdge> {
  std::size_t operator()(const rainbow::ColoredEdge& e) const noexcept {
    return std::hash<std::uint64_t>{}(rainbow::pair_key(e) * 31 +
                                      e.color.value());
  }
};

#endif  // RAINBOW_TYPES_HPP_
