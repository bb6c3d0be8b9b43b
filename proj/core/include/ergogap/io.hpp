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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ergogap/dense.hpp"
#include "ergogap/stochastic.hpp"

namespace ergogap {

/// What to do with a node that has no out-edges.
enum class DanglingPolicy {
  kUniform,   // replace the empty row with 1/n everywhere
  kSelfLoop,  // weight 1 on the diagonal
  kReject,    // DanglingNode error
};

std::optional<DanglingPolicy> parse_dangling_policy(std::string_view name) noexcept;
std::string_view to_string(DanglingPolicy policy) noexcept;

struct IngestResult {
  StochasticMatrix matrix;
  /// original_ids[k] is the id that appeared in the file for dense index k.
  std::vector<std::uint64_t> original_ids;
  /// True when the ids in the file were not exactly 0..n-1.
  bool remapped = false;
  std::vector<std::size_t> dangling_nodes;
};

/// Reads an edge list: one `src dst [weight]` per line, `#` comment lines and
/// blank lines ignored, weight defaults to 1. Duplicate edges add up and each
/// source's out-weights are normalized to 1.
///
/// Errors: ParseError (with line number), NegativeWeight, DanglingNode under
/// kReject, EmptyGraph when no edges are present.
IngestResult ingest_edge_list(std::istream& in, DanglingPolicy policy = DanglingPolicy::kUniform);

/// Reads a whitespace-separated dense matrix, one row per line.
/// Errors: ParseError, NonSquare, EmptyMatrix.
DenseMatrix read_dense(std::istream& in);

/// One decimal real per line. Throws DimensionMismatch if expected_size is set
/// and differs from the number of values read.
std::vector<double> read_vector(std::istream& in,
                                std::optional<std::size_t> expected_size = std::nullopt);

/// Writes with enough digits to round-trip every double exactly.
void write_vector(std::ostream& out, std::span<const double> values);

}  // namespace ergogap
