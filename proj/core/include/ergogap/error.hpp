// Copyright 2026 The ergogap Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ergogap {

enum class ErrorCode {
  kNegativeWeight,
  kRowSumOutOfTolerance,
  kIndexOutOfRange,
  kParseError,
  kDanglingNode,
  kEmptyGraph,
  kEmptyMatrix,
  kNotOnSimplex,
  kNotZeroSum,
  kDampingOutOfRange,
  kDimensionMismatch,
  kDimensionCapExceeded,
  kPairCapExceeded,
  kNonSquare,
  kKMaxZero,
  kNotFixedVector,
  kDependentVectors,
  kNoContraction,
  kMaxItersExceeded,
  kNoConvergence,
  kSingularSystem,
  kInvalidArgument,
  kIoError,
};

// Stable CamelCase name, e.g. "PairCapExceeded". Used in error JSON.
std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ergogap
