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

#include "inputs.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iterator>
#include <sstream>

#include "ergogap/error.hpp"

namespace ergogap::cli {

std::string InputDigest::read(const std::string& role, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + role + " file '" + path + "'");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read " + role + " file '" + path + "'");
  buffer_ += role;
  buffer_ += '\0';
  buffer_ += std::to_string(bytes.size());
  buffer_ += '\0';
  buffer_ += bytes;
  return bytes;
}

std::string InputDigest::hex() const {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(buffer_.data(), buffer_.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIoError, "sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xf];
  }
  return out;
}

LoadedMatrix load_matrix(const MatrixFlags& flags, InputDigest& digest) {
  if (flags.edges.empty() == flags.dense.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "exactly one of --edges or --dense is required");
  }
  if (!flags.edges.empty()) {
    const auto policy = parse_dangling_policy(flags.dangling);
    if (!policy) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--dangling must be uniform, self_loop or reject, got '" + flags.dangling + "'");
    }
    std::istringstream in(digest.read("edges", flags.edges));
    auto r = ingest_edge_list(in, *policy);
    return LoadedMatrix{std::move(r.matrix), "edges", std::move(r.original_ids), r.remapped,
                        std::move(r.dangling_nodes)};
  }
  std::istringstream in(digest.read("dense", flags.dense));
  return LoadedMatrix{from_dense(read_dense(in), flags.row_sum_tol), "dense", {}, false, {}};
}

SimplexVector load_simplex(const std::string& source, std::size_t n, const std::string& role,
                           InputDigest& digest) {
  if (source == "uniform") return SimplexVector::uniform(n);
  std::istringstream in(digest.read(role, source));
  return SimplexVector::make(read_vector(in, n));
}

}  // namespace ergogap::cli
