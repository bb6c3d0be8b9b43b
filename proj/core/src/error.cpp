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

#include "ergogap/error.hpp"

namespace ergogap {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kRowSumOutOfTolerance: return "RowSumOutOfTolerance";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDanglingNode: return "DanglingNode";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kNotOnSimplex: return "NotOnSimplex";
    case ErrorCode::kNotZeroSum: return "NotZeroSum";
    case ErrorCode::kDampingOutOfRange: return "DampingOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::kPairCapExceeded: return "PairCapExceeded";
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kKMaxZero: return "KMaxZero";
    case ErrorCode::kNotFixedVector: return "NotFixedVector";
    case ErrorCode::kDependentVectors: return "DependentVectors";
    case ErrorCode::kNoContraction: return "NoContraction";
    case ErrorCode::kMaxItersExceeded: return "MaxItersExceeded";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ergogap
