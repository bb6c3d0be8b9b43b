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
#include <optional>
#include <string>
#include <vector>

#include "ergogap/io.hpp"
#include "ergogap/stochastic.hpp"

namespace ergogap::cli {

/// SHA-256 over every input file, in the order they were read. Each file
/// contributes its role, its byte length and its bytes, so swapping roles
/// changes the digest.
class InputDigest {
 public:
  /// Reads the whole file, feeds it to the digest and returns the bytes.
  std::string read(const std::string& role, const std::string& path);
  std::string hex() const;

 private:
  std::string buffer_;
};

struct MatrixFlags {
  std::string edges;
  std::string dense;
  std::string dangling = "uniform";
  double row_sum_tol = kDefaultRowSumTol;
};

struct LoadedMatrix {
  StochasticMatrix matrix;
  std::string format;
  /// Original node id per internal index. Empty for dense input.
  std::vector<std::uint64_t> ids;
  bool remapped = false;
  std::vector<std::size_t> dangling_nodes;

  /// Public label of internal index i: the node id for edge lists, the row
  /// index otherwise.
  std::uint64_t label(std::size_t i) const { return ids.empty() ? i : ids[i]; }
};

LoadedMatrix load_matrix(const MatrixFlags& flags, InputDigest& digest);

/// "uniform" or a vector file of length n.
SimplexVector load_simplex(const std::string& source, std::size_t n, const std::string& role,
                           InputDigest& digest);

}  // namespace ergogap::cli
