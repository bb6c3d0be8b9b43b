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

#include "ergogap/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <string>

#include "ergogap/error.hpp"

namespace ergogap {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool skippable(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || tokens.front().front() == '#';
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": " + what);
}

double parse_real(std::string_view tok, std::size_t line_no) {
  double v = 0.0;
  // from_chars rejects a leading '+', which people do write.
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    parse_error(line_no, "invalid number '" + std::string(tok) + "'");
  }
  return v;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    parse_error(line_no, "invalid node id '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::optional<DanglingPolicy> parse_dangling_policy(std::string_view name) noexcept {
  if (name == "uniform") return DanglingPolicy::kUniform;
  if (name == "self_loop") return DanglingPolicy::kSelfLoop;
  if (name == "reject") return DanglingPolicy::kReject;
  return std::nullopt;
}

std::string_view to_string(DanglingPolicy policy) noexcept {
  switch (policy) {
    case DanglingPolicy::kUniform: return "uniform";
    case DanglingPolicy::kSelfLoop: return "self_loop";
    case DanglingPolicy::kReject: return "reject";
  }
  return "uniform";
}

IngestResult ingest_edge_list(std::istream& in, DanglingPolicy policy) {
  struct RawEdge {
    std::uint64_t src;
    std::uint64_t dst;
    double weight;
  };
  std::vector<RawEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (skippable(tokens)) continue;
    if (tokens.size() != 2 && tokens.size() != 3) {
      parse_error(line_no, "expected 'src dst [weight]'");
    }
    RawEdge e{parse_id(tokens[0], line_no), parse_id(tokens[1], line_no), 1.0};
    if (tokens.size() == 3) e.weight = parse_real(tokens[2], line_no);
    if (e.weight < 0.0) {
      throw Error(ErrorCode::kNegativeWeight,
                  "line " + std::to_string(line_no) + ": negative edge weight");
    }
    edges.push_back(e);
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "failed reading edge list");
  if (edges.empty()) throw Error(ErrorCode::kEmptyGraph, "edge list contains no edges");

  // Ids that are exactly 0..n-1 keep their value; anything else is remapped
  // in increasing id order.
  std::map<std::uint64_t, std::size_t> index;
  for (const RawEdge& e : edges) {
    index.emplace(e.src, 0);
    index.emplace(e.dst, 0);
  }
  IngestResult result{StochasticMatrix::identity(1), {}, false, {}};
  result.original_ids.reserve(index.size());
  for (auto& [id, k] : index) {
    k = result.original_ids.size();
    result.original_ids.push_back(id);
  }
  const std::size_t n = index.size();
  result.remapped = result.original_ids.back() != n - 1;

  std::vector<RawRow> rows(n);
  for (const RawEdge& e : edges) {
    rows[index.at(e.src)].push_back({index.at(e.dst), e.weight});
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (const Entry& x : rows[i]) s += x.weight;
    if (s > 0.0) {
      for (Entry& x : rows[i]) x.weight /= s;
      continue;
    }
    result.dangling_nodes.push_back(i);
    switch (policy) {
      case DanglingPolicy::kUniform:
        rows[i].clear();
        for (std::size_t j = 0; j < n; ++j) rows[i].push_back({j, 1.0 / static_cast<double>(n)});
        break;
      case DanglingPolicy::kSelfLoop:
        rows[i] = {{i, 1.0}};
        break;
      case DanglingPolicy::kReject:
        throw Error(ErrorCode::kDanglingNode,
                    "node " + std::to_string(result.original_ids[i]) + " has no out-edges");
    }
  }
  result.matrix = validate_stochastic(std::move(rows), n);
  return result;
}

DenseMatrix read_dense(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (skippable(tokens)) continue;
    std::vector<double> row;
    row.reserve(tokens.size());
    for (auto tok : tokens) row.push_back(parse_real(tok, line_no));
    if (!rows.empty() && row.size() != rows.front().size()) {
      parse_error(line_no, "row has " + std::to_string(row.size()) + " entries, expected " +
                               std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "failed reading dense matrix");
  if (rows.empty()) throw Error(ErrorCode::kEmptyMatrix, "dense matrix file has no rows");
  if (rows.size() != rows.front().size()) {
    throw Error(ErrorCode::kNonSquare, "dense matrix is " + std::to_string(rows.size()) + "x" +
                                           std::to_string(rows.front().size()));
  }
  return DenseMatrix::from_rows(rows);
}

std::vector<double> read_vector(std::istream& in, std::optional<std::size_t> expected_size) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (skippable(tokens)) continue;
    if (tokens.size() != 1) parse_error(line_no, "expected one value per line");
    values.push_back(parse_real(tokens.front(), line_no));
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "failed reading vector");
  if (expected_size && values.size() != *expected_size) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector has " + std::to_string(values.size()) + " entries, expected " +
                    std::to_string(*expected_size));
  }
  return values;
}

void write_vector(std::ostream& out, std::span<const double> values) {
  char buf[64];
  for (double v : values) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.write(buf, ptr - buf);
    out.put('\n');
  }
}

}  // namespace ergogap
