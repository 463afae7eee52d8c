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

#ifndef RAINBOW_ERROR_HPP_
#define RAINBOW_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

enum class ErrorCode {
  // Input errors.
  kMissingPair,
  kDuplicatePair,
  kColorOutOfRange,
  kVertexOutOfRange,
  kAdjacentClash,
  kSelfLoop,
  kNotAPermutation,
  kSyntaxError,
  kSchemaError,
  kInvalidArgument,
  kInstanceTooLarge,
  // Tree surgery errors.
  kNotPendant,
  kColorClash,
  kDegenerateSwap,
  kNotSpanningTree,
  // Construction invariants. Any of these means the engine has a bug.
  kLeafSetExhausted,
  kEmptyCandidateSet,
  kCycleDetected,
  kLeafBoundViolated,
  kLeafSetMismatch,
  kFValidationFailed,
  kRoundOutOfRange,
};

std::string_view error_code_name(ErrorCode code);

// True for codes that can only arise from an implementation bug when the
// input coloring has been validated.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }
  bool internal() const { return is_internal(code_); }

 private:
  ErrorCode code_;
};

}  // namespace rainbow

#endif  // RAINBOW_ERROR_HPP_
