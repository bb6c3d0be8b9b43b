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
#include <span>
#include <variant>
#include <vector>

#include "ergogap/dense.hpp"

namespace ergogap {

inline constexpr double kDefaultRowSumTol = 1e-10;
inline constexpr std::size_t kDefaultDenseCap = 512;

/// One stored entry of a sparse row.
struct Entry {
  std::size_t col = 0;
  double weight = 0.0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

using RawRow = std::vector<Entry>;

/// Validated row-stochastic matrix in compressed sparse row layout.
///
/// Every stored weight is strictly positive, column indices within a row are
/// strictly increasing, and each row has been divided by its computed sum.
/// Instances are immutable; the only way to obtain one is through
/// validate_stochastic() or the named constructors below.
class StochasticMatrix {
 public:
  static StochasticMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t nnz() const noexcept { return entries_.size(); }

  std::span<const Entry> row(std::size_t i) const {
    return {entries_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  friend bool operator==(const StochasticMatrix&, const StochasticMatrix&) = default;

 private:
  StochasticMatrix() = default;
  friend StochasticMatrix validate_stochastic(std::vector<RawRow>, std::size_t, double);

  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Entry> entries_;
};

/// Merges duplicate columns, drops zero weights, checks signs and row sums
/// and renormalizes each row by its computed sum.
///
/// Errors: EmptyMatrix (n == 0), DimensionMismatch (rows.size() != n),
/// IndexOutOfRange, NegativeWeight, RowSumOutOfTolerance.
StochasticMatrix validate_stochastic(std::vector<RawRow> rows, std::size_t n,
                                     double tol = kDefaultRowSumTol);

/// Validates a dense row-major matrix as stochastic.
StochasticMatrix from_dense(const DenseMatrix& m, double tol = kDefaultRowSumTol);

/// Nonnegative vector summing to one.
class SimplexVector {
 public:
  /// Throws NotOnSimplex on negative or non-finite entries or when the sum
  /// deviates from 1 by more than tol. The stored entries are divided by
  /// their computed sum.
  static SimplexVector make(std::vector<double> entries, double tol = kDefaultRowSumTol);
  static SimplexVector uniform(std::size_t n);
  static SimplexVector basis(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> values() const noexcept { return entries_; }

 private:
  explicit SimplexVector(std::vector<double> e) : entries_(std::move(e)) {}
  std::vector<double> entries_;
};

/// Vector whose entries sum to zero (within 1e-12 * n).
class ZeroSumVector {
 public:
  static ZeroSumVector make(std::vector<double> entries);
  /// Subtracts the mean, so any input lands in the zero-sum subspace.
  static ZeroSumVector project(std::vector<double> entries);
  /// (e_i - e_k) / 2, the extremal direction for a pair of rows.
  static ZeroSumVector half_difference(std::size_t n, std::size_t i, std::size_t k);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> values() const noexcept { return entries_; }

 private:
  explicit ZeroSumVector(std::vector<double> e) : entries_(std::move(e)) {}
  std::vector<double> entries_;
};

/// A = c P + (1 - c) E. E is either rank one (every row equal to the
/// teleportation vector z, so E x = <x, z> e) or a general stochastic matrix.
/// The mixture is never formed explicitly.
class GoogleMatrix {
 public:
  using Teleportation = std::variant<SimplexVector, StochasticMatrix>;

  std::size_t size() const noexcept { return link_.size(); }
  double damping() const noexcept { return damping_; }
  const StochasticMatrix& link_matrix() const noexcept { return link_; }
  const Teleportation& teleportation() const noexcept { return teleport_; }

  bool rank_one() const noexcept { return std::holds_alternative<SimplexVector>(teleport_); }
  /// Null when E is general.
  const SimplexVector* teleport_vector() const noexcept {
    return std::get_if<SimplexVector>(&teleport_);
  }
  const StochasticMatrix* general_teleport() const noexcept {
    return std::get_if<StochasticMatrix>(&teleport_);
  }

 private:
  GoogleMatrix(StochasticMatrix p, double c, Teleportation e)
      : link_(std::move(p)), damping_(c), teleport_(std::move(e)) {}
  friend GoogleMatrix build_google(StochasticMatrix, double, SimplexVector);
  friend GoogleMatrix build_google(StochasticMatrix, double, StochasticMatrix);

  StochasticMatrix link_;
  double damping_;
  Teleportation teleport_;
};

/// Errors: DampingOutOfRange (c outside [0, 1] or NaN), DimensionMismatch.
GoogleMatrix build_google(StochasticMatrix p, double c, SimplexVector teleport);
GoogleMatrix build_google(StochasticMatrix p, double c, StochasticMatrix teleport);

/// Sparse c P + (1 - c) E for two explicit stochastic matrices.
StochasticMatrix mix(const StochasticMatrix& p, const StochasticMatrix& e, double c);

/// y = A^t x. Throws DimensionMismatch.
std::vector<double> apply_transpose(const StochasticMatrix& a, std::span<const double> x);
std::vector<double> apply_transpose(const GoogleMatrix& a, std::span<const double> x);

/// y = A x. Throws DimensionMismatch.
std::vector<double> apply(const StochasticMatrix& a, std::span<const double> x);
std::vector<double> apply(const GoogleMatrix& a, std::span<const double> x);

double norm1(std::span<const double> x) noexcept;
double sum(std::span<const double> x) noexcept;
double dot(std::span<const double> x, std::span<const double> y);

/// Dense copy. Throws DimensionCapExceeded when n > cap.
DenseMatrix densify(const StochasticMatrix& a, std::size_t cap = kDefaultDenseCap);
DenseMatrix densify(const GoogleMatrix& a, std::size_t cap = kDefaultDenseCap);

/// Max absolute deviation of a row sum from 1 and min entry, for checking
/// products of stochastic matrices.
struct RowSumReport {
  double max_row_sum_error = 0.0;
  double min_entry = 0.0;
};
RowSumReport row_sum_report(const DenseMatrix& m) noexcept;

}  // namespace ergogap
