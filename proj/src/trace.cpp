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

#include "rainbow/trace.hpp"

#include <sstream>

#include "json.hpp"
#include "rainbow/error.hpp"

namespace rainbow {
namespace {

using Json = nlohmann::ordered_json;

Json vertex_list(const std::vector<Vertex>& xs) {
  Json out = Json::array();
  for (Vertex x : xs) out.push_back(x.value());
  return out;
}

std::string_view kind_name(TraceKind kind) {
  switch (kind) {
    case TraceKind::kBase: return "base";
    case TraceKind::kRevise: return "revise";
    case TraceKind::kFinalize: return "finalize";
  }
  return "?";
}

std::string rule_key(std::size_t index) {
  return "R" + std::to_string(index + kFirstRule);
}

[[noreturn]] void schema_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSchemaError,
              "trace line " + std::to_string(line) + ": " + what);
}

Vertex read_vertex(const Json& obj, const char* key, std::size_t line) {
  if (!obj.contains(key) || !obj[key].is_number_unsigned()) {
    schema_error(line, std::string("missing vertex field \"") + key + "\"");
  }
  return Vertex(obj[key].get<std::uint32_t>());
}

std::vector<Vertex> read_list(const Json& obj, const char* key,
                              std::size_t line) {
  if (!obj.contains(key) || !obj[key].is_array()) {
    schema_error(line, std::string("missing list field \"") + key + "\"");
  }
  std::vector<Vertex> out;
  for (const Json& x : obj[key]) {
    if (!x.is_number_unsigned()) schema_error(line, "non-vertex list entry");
    out.emplace_back(x.get<std::uint32_t>());
  }
  return out;
}

template <typename T>
T read_int(const Json& obj, const char* key, std::size_t line) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    schema_error(line, std::string("missing integer field \"") + key + "\"");
  }
  return obj[key].get<T>();
}

}  // namespace

std::string serialize_trace(const ConstructionTrace& trace) {
  std::ostringstream os;
  for (const TraceRecord& rec : trace.records) {
    Json line;
    line["kind"] = kind_name(rec.kind);
    line["k"] = rec.k;
    line["i"] = rec.i;
    switch (rec.kind) {
      case TraceKind::kBase:
        line["m"] = trace.m;
        line["root"] = rec.root.value();
        break;
      case TraceKind::kRevise: {
        line["root"] = rec.root.value();
        line["r_k"] = rec.r_k.value();
        line["w_k"] = rec.w_k.value();
        line["candidates_before"] = vertex_list(rec.candidates_before);
        Json eliminated = Json::object();
        for (std::size_t r = 0; r < kRuleCount; ++r) {
          eliminated[rule_key(r)] = vertex_list(rec.eliminated[r]);
        }
        line["eliminated"] = eliminated;
        line["admissible"] = vertex_list(rec.admissible);
        line["chosen"] =
            rec.chosen ? Json(rec.chosen->value()) : Json(nullptr);
        line["w"] = rec.w.value();
        line["v_prime"] = rec.v_prime.value();
        line["w_prime"] = rec.w_prime.value();
        line["bound_lhs"] = rec.bound_lhs;
        line["bound_rhs"] = rec.bound_rhs;
        line["elimination_cap"] = rec.elimination_cap;
        break;
      }
      case TraceKind::kFinalize:
        line["root"] = rec.root.value();
        line["r_k"] = rec.r_k.value();
        line["w_k"] = rec.w_k.value();
        line["w"] = rec.w.value();
        line["w_prime"] = rec.w_prime.value();
        break;
    }
    os << line.dump() << "\n";
  }
  return os.str();
}

ConstructionTrace parse_trace(std::string_view text) {
  ConstructionTrace trace;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json obj;
    try {
      obj = Json::parse(raw);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::kSyntaxError,
                  "trace line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!obj.is_object() || !obj.contains("kind") ||
        !obj["kind"].is_string()) {
      schema_error(line_no, "record needs a string \"kind\"");
    }
    TraceRecord rec;
    const std::string kind = obj["kind"].get<std::string>();
    rec.k = read_int<int>(obj, "k", line_no);
    rec.i = read_int<int>(obj, "i", line_no);
    rec.root = read_vertex(obj, "root", line_no);
    if (kind == "base") {
      rec.kind = TraceKind::kBase;
      trace.m = read_int<std::size_t>(obj, "m", line_no);
    } else if (kind == "revise") {
      rec.kind = TraceKind::kRevise;
      rec.r_k = read_vertex(obj, "r_k", line_no);
      rec.w_k = read_vertex(obj, "w_k", line_no);
      rec.candidates_before = read_list(obj, "candidates_before", line_no);
      if (!obj.contains("eliminated") || !obj["eliminated"].is_object()) {
        schema_error(line_no, "missing object field \"eliminated\"");
      }
      for (std::size_t r = 0; r < kRuleCount; ++r) {
        rec.eliminated[r] =
            read_list(obj["eliminated"], rule_key(r).c_str(), line_no);
      }
      rec.admissible = read_list(obj, "admissible", line_no);
      if (!obj.contains("chosen")) schema_error(line_no, "missing \"chosen\"");
      if (!obj["chosen"].is_null()) rec.chosen = read_vertex(obj, "chosen", line_no);
      rec.w = read_vertex(obj, "w", line_no);
      rec.v_prime = read_vertex(obj, "v_prime", line_no);
      rec.w_prime = read_vertex(obj, "w_prime", line_no);
      rec.bound_lhs = read_int<std::size_t>(obj, "bound_lhs", line_no);
      rec.bound_rhs = read_int<std::int64_t>(obj, "bound_rhs", line_no);
      rec.elimination_cap =
          read_int<std::int64_t>(obj, "elimination_cap", line_no);
    } else if (kind == "finalize") {
      rec.kind = TraceKind::kFinalize;
      rec.r_k = read_vertex(obj, "r_k", line_no);
      rec.w_k = read_vertex(obj, "w_k", line_no);
      rec.w = read_vertex(obj, "w", line_no);
      rec.w_prime = read_vertex(obj, "w_prime", line_no);
    } else {
      schema_error(line_no, "unknown kind \"" + kind + "\"");
    }
    trace.records.push_back(std::move(rec));
  }
  return trace;
}

}  // namespace rainbow
