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

#include "rainbow/coloring.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rainbow/error.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {
namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::string pair_string(Vertex u, Vertex v) {
  std::ostringstream os;
  os << "{" << u << ", " << v << "}";
  return os.str();
}

void check_permutation(std::span<const std::uint32_t> perm, std::size_t size,
                       const char* what) {
  if (perm.size() != size) {
    throw Error(ErrorCode::kNotAPermutation,
                std::string(what) + " permutation has size " +
                    std::to_string(perm.size()) + ", expected " +
                    std::to_string(size));
  }
  std::vector<bool> seen(size, false);
  for (std::uint32_t x : perm) {
    if (x >= size || seen[x]) {
      throw Error(ErrorCode::kNotAPermutation,
                  std::string(what) + " permutation is not a bijection");
    }
    seen[x] = true;
  }
}

}  // namespace

Color EdgeColoring::color_of(Vertex u, Vertex v) const {
  if (u == v) {
    throw Error(ErrorCode::kSelfLoop, "no color on loop at vertex " +
                                          std::to_string(u.value()));
  }
  return Color(table_[u.value() * vertex_count() + v.value()]);
}

std::vector<ColoredEdge> EdgeColoring::edges() const {
  const auto n = static_cast<std::uint32_t>(vertex_count());
  std::vector<ColoredEdge> out;
  out.reserve(m_ * color_count());
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      out.push_back({Vertex(u), Vertex(v), color_of(Vertex(u), Vertex(v))});
    }
  }
  return out;
}

std::vector<ColoredEdge> EdgeColoring::color_class(Color c) const {
  const auto n = static_cast<std::uint32_t>(vertex_count());
  std::vector<ColoredEdge> out;
  out.reserve(m_);
  for (std::uint32_t u = 0; u < n; ++u) {
    const Vertex w = partner(c, Vertex(u));
    if (Vertex(u) < w) out.push_back({Vertex(u), w, c});
  }
  return out;
}

std::string EdgeColoring::digest() const {
  const std::string text = serialize_coloring(*this);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

EdgeColoring validate_proper(std::span<const ColoredEdge> raw_table,
                             std::size_t m) {
  if (m == 0) {
    throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  }
  const std::size_t n = 2 * m;
  const std::size_t colors = n - 1;

  EdgeColoring out;
  out.m_ = m;
  out.table_.assign(n * n, kUnset);
  out.partner_.assign(colors * n, kUnset);

  for (const ColoredEdge& e : raw_table) {
    if (e.u.value() >= n || e.v.value() >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + pair_string(e.u, e.v) + " outside K_" +
                      std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop,
                  "loop at vertex " + std::to_string(e.u.value()));
    }
    if (e.color.value() >= colors) {
      throw Error(ErrorCode::kColorOutOfRange,
                  "edge " + pair_string(e.u, e.v) + " has color " +
                      std::to_string(e.color.value()) + ", expected < " +
                      std::to_string(colors));
    }
    std::uint32_t& slot = out.table_[e.u.value() * n + e.v.value()];
    if (slot != kUnset) {
      throw Error(ErrorCode::kDuplicatePair,
                  "pair " + pair_string(e.u, e.v) + " listed twice");
    }
    slot = e.color.value();
    out.table_[e.v.value() * n + e.u.value()] = e.color.value();
  }

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (out.table_[u * n + v] == kUnset) {
        throw Error(ErrorCode::kMissingPair,
                    "pair " + pair_string(Vertex(u), Vertex(v)) +
                        " has no color");
      }
    }
  }

  // Vertices are scanned in order, so the reported clash is the smallest
  // vertex with a repeated color.
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (v == w) continue;
      const std::uint32_t c = out.table_[v * n + w];
      std::uint32_t& slot = out.partner_[c * n + v];
      if (slot != kUnset) {
        throw Error(ErrorCode::kAdjacentClash,
                    "vertex " + std::to_string(v) + " has two edges of color " +
                        std::to_string(c));
      }
      slot = static_cast<std::uint32_t>(w);
    }
  }
  return out;
}

EdgeColoring round_robin(std::size_t m) {
  if (m == 0) {
    throw Error(ErrorCode::kInvalidArgument, "m must be positive");
  }
  const auto cycle = static_cast<std::uint32_t>(2 * m - 1);
  const Vertex fixed(cycle);
  std::vector<ColoredEdge> raw;
  raw.reserve(m * cycle);
  for (std::uint32_t c = 0; c < cycle; ++c) {
    raw.push_back({fixed, Vertex(c), Color(c)});
    for (std::uint32_t i = 1; i < m; ++i) {
      raw.push_back({Vertex((c + i) % cycle), Vertex((c + cycle - i) % cycle),
                     Color(c)});
    }
  }
  return validate_proper(raw, m);
}

EdgeColoring permute_coloring(const EdgeColoring& coloring,
                              std::span<const std::uint32_t> vertex_perm,
                              std::span<const std::uint32_t> color_perm) {
  check_permutation(vertex_perm, coloring.vertex_count(), "vertex");
  check_permutation(color_perm, coloring.color_count(), "color");
  std::vector<ColoredEdge> raw = coloring.edges();
  for (ColoredEdge& e : raw) {
    e = {Vertex(vertex_perm[e.u.value()]), Vertex(vertex_perm[e.v.value()]),
         Color(color_perm[e.color.value()])};
  }
  return validate_proper(raw, coloring.m());
}

EdgeColoring permuted_round_robin(std::size_t m, std::uint64_t seed) {
  const EdgeColoring base = round_robin(m);
  Rng rng(seed);
  std::vector<std::uint32_t> vertex_perm(base.vertex_count());
  std::vector<std::uint32_t> color_perm(base.color_count());
  std::iota(vertex_perm.begin(), vertex_perm.end(), 0u);
  std::iota(color_perm.begin(), color_perm.end(), 0u);
  rng.shuffle(vertex_perm);
  rng.shuffle(color_perm);
  return permute_coloring(base, vertex_perm, color_perm);
}

EdgeColoring parse_coloring(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSyntaxError, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw Error(ErrorCode::kSchemaError,
                "coloring document needs keys \"n\" and \"edges\"");
  }
  const nlohmann::json& n_field = doc["n"];
  if (!n_field.is_number_unsigned() || n_field.get<std::uint64_t>() < 2) {
    throw Error(ErrorCode::kSchemaError, "\"n\" must be an integer >= 2");
  }
  const auto n = n_field.get<std::uint64_t>();
  if (n % 2 != 0) {
    throw Error(ErrorCode::kSchemaError,
                "\"n\" must be even, got " + std::to_string(n));
  }
  if (n > (1u << 16)) {
    throw Error(ErrorCode::kSchemaError, "\"n\" is unreasonably large");
  }
  const nlohmann::json& edges = doc["edges"];
  if (!edges.is_array()) {
    throw Error(ErrorCode::kSchemaError, "\"edges\" must be an array");
  }

  std::vector<ColoredEdge> raw;
  raw.reserve(edges.size());
  std::set<std::uint64_t> seen;
  for (const nlohmann::json& entry : edges) {
    if (!entry.is_array() || entry.size() != 3 ||
        !std::all_of(entry.begin(), entry.end(),
                     [](const nlohmann::json& x) {
                       return x.is_number_unsigned() &&
                              x.get<std::uint64_t>() < (1ULL << 31);
                     })) {
      throw Error(ErrorCode::kSchemaError,
                  "edge entries must be [u, v, c] with non-negative integers");
    }
    const ColoredEdge e{Vertex(entry[0].get<std::uint32_t>()),
                        Vertex(entry[1].get<std::uint32_t>()),
                        Color(entry[2].get<std::uint32_t>())};
    if (!(e.u < e.v)) {
      throw Error(ErrorCode::kSchemaError,
                  "edge entries must satisfy u < v, got " +
                      pair_string(e.u, e.v));
    }
    if (!seen.insert(pair_key(e)).second) {
      throw Error(ErrorCode::kSchemaError,
                  "pair " + pair_string(e.u, e.v) + " appears twice");
    }
    raw.push_back(e);
  }
  return validate_proper(raw, n / 2);
}

std::string serialize_coloring(const EdgeColoring& coloring) {
  std::ostringstream os;
  os << "{\"n\": " << coloring.vertex_count() << ", \"edges\": [";
  const std::vector<ColoredEdge> edges = coloring.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << (i == 0 ? "\n  " : ",\n  ") << "[" << edges[i].u << ", "
       << edges[i].v << ", " << edges[i].color << "]";
  }
  os << "\n]}\n";
  return os.str();
}

}  // namespace rainbow
