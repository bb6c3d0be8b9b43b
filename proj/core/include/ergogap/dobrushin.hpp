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

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "ergogap/dense.hpp"
#include "ergogap/stochastic.hpp"

namespace ergogap {

inline constexpr std::size_t kDefaultPairCap = 5000;

/// The two equivalent expressions for the ergodicity coefficient:
///   half_l1:           (1/2) max_{i,k} sum_j |b_ij - b_kj|
///   one_minus_overlap: 1 - min_{i,k} sum_j min(b_ij, b_kj)
enum class CoefficientForm { kHalfL1, kOneMinusOverlap };

std::string_view to_string(CoefficientForm form) noexcept;

struct CoefficientResult {
  double q = 0.0;
  /// Lexicographically smallest (i, k), i < k, attaining the extremum.
  /// (0, 0) when n == 1.
  std::pair<std::size_t, std::size_t> argmax_pair{0, 0};
  CoefficientForm form = CoefficientForm::kOneMinusOverlap;
};

struct CoefficientOptions {
  /// Unset picks one_minus_overlap for sparse inputs and half_l1 for dense.
  std::optional<CoefficientForm> form;
  /// Largest n for which all n(n-1)/2 pairs are evaluated.
  std::size_t pair_cap = kDefaultPairCap;
};

/// sum_j min(a_j, b_j) over two rows sorted by column.
double overlap(std::span<const Entry> a, std::span<const Entry> b) noexcept;

/// sum_j |a_j - b_j| over two rows sorted by column.
double l1_distance(std::span<const Entry> a, std::span<const Entry> b) noexcept;

/// Exact Dobrushin coefficient over all unordered row pairs. Result is
/// clamped to [0, 1].
///
/// Errors: PairCapExceeded when n > options.pair_cap. EmptyMatrix/NonSquare
/// for degenerate dense input.
CoefficientResult dobrushin_coefficient(const StochasticMatrix& b,
                                        const CoefficientOptions& options = {});
/// Rank-one teleportation reduces to c * q(P): every pair of rows of the
/// mixture differs by c (p_i - p_k). A general E is mixed sparsely first.
CoefficientResult dobrushin_coefficient(const GoogleMatrix& a,
                                        const CoefficientOptions& options = {});
CoefficientResult dobrushin_coefficient(const DenseMatrix& b,
                                        const CoefficientOptions& options = {});

/// (1/2) max_{i,k} sum_j |b_ij - b_kj| for an arbitrary square real matrix.
/// This is a seminorm on all n x n matrices. Throws NonSquare.
double seminorm_q(const DenseMatrix& b);

}  // namespace ergogap
