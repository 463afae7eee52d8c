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

#ifndef RAINBOW_TRACE_HPP_
#define RAINBOW_TRACE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

// Restrictions R2..R11 on the swap vertex, stored at index rule - 2.
inline constexpr std::size_t kRuleCount = 10;
inline constexpr int kFirstRule = 2;

enum class TraceKind {
  kBase,      // round 1: the spanning star
  kRevise,    // round k, tree i < k revised and T_k^k(i) extended
  kFinalize,  // round k, last replacement closing T_k^k
};

// One construction event. Field meaning depends on `kind`:
//   base:     root = r_1
//   revise:   root = r_i; chosen = v_i; w = w_i; v_prime = v'_i;
//             w_prime = w'_i
//   finalize: root = r_k; w = w_k; w_prime = w'_k
struct TraceRecord {
  TraceKind kind = TraceKind::kBase;
  int k = 1;
  int i = 0;
  Vertex root;
  Vertex r_k;
  Vertex w_k;

  std::vector<Vertex> candidates_before;  // L*_{k-1}
  std::array<std::vector<Vertex>, kRuleCount> eliminated;
  std::vector<Vertex> admissible;
  std::optional<Vertex> chosen;
  Vertex w;
  Vertex v_prime;
  Vertex w_prime;

  std::size_t bound_lhs = 0;      // |L_{k-1}|
  std::int64_t bound_rhs = 0;     // 2m - 3k^2 + 6k - 1
  std::int64_t elimination_cap = 0;  // 6k - 7

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct ConstructionTrace {
  std::size_t m = 0;
  std::vector<TraceRecord> records;

  friend bool operator==(const ConstructionTrace&,
                         const ConstructionTrace&) = default;
};

// One JSON object per line. The base record carries "m".
std::string serialize_trace(const ConstructionTrace& trace);
ConstructionTrace parse_trace(std::string_view text);

}  // namespace rainbow

#endif  // RAINBOW_TRACE_HPP_
