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
#include <vector>

namespace ergogap {

/// Row-major dense real matrix. Used for matrix powers, the oracle and
/// anything else that is only meant to run at desk scale.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Builds from nested rows; all rows must have the same length.
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const noexcept { return data_; }

  DenseMatrix transpose() const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator*=(double alpha);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs);
DenseMatrix operator*(double alpha, DenseMatrix m);

/// Matrix product. Throws DimensionMismatch on incompatible shapes.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// y = M x.
std::vector<double> multiply(const DenseMatrix& m, std::span<const double> x);

/// Largest absolute entry; 0 for an empty matrix.
double max_abs(const DenseMatrix& m) noexcept;

}  // namespace ergogap
