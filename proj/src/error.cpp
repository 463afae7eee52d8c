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

#include "rainbow/error.hpp"

namespace rainbow {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingPair: return "MissingPair";
    case ErrorCode::kDuplicatePair: return "DuplicatePair";
    case ErrorCode::kColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kAdjacentClash: return "AdjacentClash";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kNotPendant: return "NotPendant";
    case ErrorCode::kColorClash: return "ColorClash";
    case ErrorCode::kDegenerateSwap: return "DegenerateSwap";
    case ErrorCode::kNotSpanningTree: return "NotSpanningTree";
    case ErrorCode::kLeafSetExhausted: return "LeafSetExhausted";
    case ErrorCode::kEmptyCandidateSet: return "EmptyCandidateSet";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kLeafBoundViolated: return "LeafBoundViolated";
    case ErrorCode::kLeafSetMismatch: return "LeafSetMismatch";
    case ErrorCode::kFValidationFailed: return "FValidationFailed";
    case ErrorCode::kRoundOutOfRange: return "RoundOutOfRange";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLeafSetExhausted:
    case ErrorCode::kEmptyCandidateSet:
    case ErrorCode::kCycleDetected:
    case ErrorCode::kLeafBoundViolated:
    case ErrorCode::kLeafSetMismatch:
    case ErrorCode::kFValidationFailed:
    case ErrorCode::kRoundOutOfRange:
    case ErrorCode::kNotPendant:
    case ErrorCode::kColorClash:
    case ErrorCode::kDegenerateSwap:
    case ErrorCode::kNotSpanningTree:
      return true;
    default:
      return false;
  }
}

}  // namespace rainbow
