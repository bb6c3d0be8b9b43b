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

#include "ergogap/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ergogap/error.hpp"

namespace ergogap {

namespace {

void require_size(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw Error(ErrorCode::kDimensionMismatch, std::string(what) + ": expected length " +
                                                   std::to_string(expected) + ", got " +
                                                   std::to_string(got));
  }
}

void require_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorCode::kDimensionCapExceeded,
                "dimension " + std::to_string(n) + " exceeds dense cap " + std::to_string(cap));
  }
}

}  // namespace

StochasticMatrix StochasticMatrix::identity(std::size_t n) {
  std::vector<RawRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = {{i, 1.0}};
  return validate_stochastic(std::move(rows), n);
}

StochasticMatrix validate_stochastic(std::vector<RawRow> rows, std::size_t n, double tol) {
  if (n == 0) throw Error(ErrorCode::kEmptyMatrix, "matrix dimension must be at least 1");
  require_size(n, rows.size(), "row count");

  StochasticMatrix m;
  m.n_ = n;
  m.offsets_.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    RawRow& row = rows[i];
    for (const Entry& e : row) {
      if (e.col >= n) {
        throw Error(ErrorCode::kIndexOutOfRange, "row " + std::to_string(i) + ": column " +
                                                     std::to_string(e.col) + " out of range");
      }
      if (!std::isfinite(e.weight)) {
        throw Error(ErrorCode::kParseError,
                    "row " + std::to_string(i) + ": non-finite weight");
      }
      if (e.weight < 0.0) {
        throw Error(ErrorCode::kNegativeWeight,
                    "row " + std::to_string(i) + ": negative weight at column " +
                        std::to_string(e.col));
      }
    }
    std::stable_sort(row.begin(), row.end(),
                     [](const Entry& a, const Entry& b) { return a.col < b.col; });

    const std::size_t start = m.entries_.size();
    for (const Entry& e : row) {
      if (e.weight == 0.0) continue;
      if (m.entries_.size() > start && m.entries_.back().col == e.col) {
        m.entries_.back().weight += e.weight;
      } else {
        m.entries_.push_back(e);
      }
    }

    double s = 0.0;
    for (std::size_t k = start; k < m.entries_.size(); ++k) s += m.entries_[k].weight;
    if (!(std::abs(s - 1.0) <= tol)) {
      throw Error(ErrorCode::kRowSumOutOfTolerance,
                  "row " + std::to_string(i) + " sums to " + std::to_string(s));
    }
    for (std::size_t k = start; k < m.entries_.size(); ++k) m.entries_[k].weight /= s;
    m.offsets_.push_back(m.entries_.size());
  }
  return m;
}

StochasticMatrix from_dense(const DenseMatrix& m, double tol) {
  if (!m.square()) throw Error(ErrorCode::kNonSquare, "stochastic matrix must be square");
  std::vector<RawRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0.0) rows[i].push_back({j, m(i, j)});
    }
  }
  return validate_stochastic(std::move(rows), m.rows(), tol);
}

SimplexVector SimplexVector::make(std::vector<double> entries, double tol) {
  if (entries.empty()) throw Error(ErrorCode::kEmptyMatrix, "simplex vector must be non-empty");
  double s = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!std::isfinite(entries[i]) || entries[i] < 0.0) {
      throw Error(ErrorCode::kNotOnSimplex,
                  "entry " + std::to_string(i) + " is negative or not finite");
    }
    s += entries[i];
  }
  if (!(std::abs(s - 1.0) <= tol)) {
    throw Error(ErrorCode::kNotOnSimplex, "entries sum to " + std::to_string(s));
  }
  for (double& v : entries) v /= s;
  return SimplexVector(std::move(entries));
}

SimplexVector SimplexVector::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kEmptyMatrix, "simplex vector must be non-empty");
  return SimplexVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

SimplexVector SimplexVector::basis(std::size_t n, std::size_t i) {
  if (i >= n) throw Error(ErrorCode::kIndexOutOfRange, "basis index out of range");
  std::vector<double> e(n, 0.0);
  e[i] = 1.0;
  return SimplexVector(std::move(e));
}

ZeroSumVector ZeroSumVector::make(std::vector<double> entries) {
  const double tol = 1e-12 * static_cast<double>(entries.size());
  double s = 0.0;
  for (double v : entries) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kNotZeroSum, "non-finite entry");
    s += v;
  }
  if (!(std::abs(s) <= tol)) {
    throw Error(ErrorCode::kNotZeroSum, "entries sum to " + std::to_string(s));
  }
  return ZeroSumVector(std::move(entries));
}

ZeroSumVector ZeroSumVector::project(std::vector<double> entries) {
  if (entries.empty()) return ZeroSumVector({});
  const double mean = sum(entries) / static_cast<double>(entries.size());
  for (double& v : entries) v -= mean;
  return ZeroSumVector(std::move(entries));
}

ZeroSumVector ZeroSumVector::half_difference(std::size_t n, std::size_t i, std::size_t k) {
  if (i >= n || k >= n) throw Error(ErrorCode::kIndexOutOfRange, "row index out of range");
  std::vector<double> y(n, 0.0);
  y[i] += 0.5;
  y[k] -= 0.5;
  return ZeroSumVector(std::move(y));
}

GoogleMatrix build_google(StochasticMatrix p, double c, SimplexVector teleport) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw Error(ErrorCode::kDampingOutOfRange, "damping factor must lie in [0, 1]");
  }
  require_size(p.size(), teleport.size(), "teleportation vector");
  return GoogleMatrix(std::move(p), c, std::move(teleport));
}

GoogleMatrix build_google(StochasticMatrix p, double c, StochasticMatrix teleport) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw Error(ErrorCode::kDampingOutOfRange, "damping factor must lie in [0, 1]");
  }
  require_size(p.size(), teleport.size(), "teleportation matrix");
  return GoogleMatrix(std::move(p), c, std::move(teleport));
}

StochasticMatrix mix(const StochasticMatrix& p, const StochasticMatrix& e, double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw Error(ErrorCode::kDampingOutOfRange, "damping factor must lie in [0, 1]");
  }
  require_size(p.size(), e.size(), "mixture operand");
  const std::size_t n = p.size();
  std::vector<RawRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Entry& x : p.row(i)) rows[i].push_back({x.col, c * x.weight});
    for (const Entry& x : e.row(i)) rows[i].push_back({x.col, (1.0 - c) * x.weight});
  }
  return validate_stochastic(std::move(rows), n);
}

std::vector<double> apply_transpose(const StochasticMatrix& a, std::span<const double> x) {
  require_size(a.size(), x.size(), "apply_transpose");
  std::vector<double> y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (const Entry& e : a.row(i)) y[e.col] += xi * e.weight;
  }
  return y;
}

std::vector<double> apply_transpose(const GoogleMatrix& a, std::span<const double> x) {
  const double c = a.damping();
  std::vector<double> y = apply_transpose(a.link_matrix(), x);
  for (double& v : y) v *= c;
  if (const SimplexVector* z = a.teleport_vector()) {
    const double mass = (1.0 - c) * sum(x);
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += mass * (*z)[j];
  } else {
    const std::vector<double> ey = apply_transpose(*a.general_teleport(), x);
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += (1.0 - c) * ey[j];
  }
  return y;
}

std::vector<double> apply(const StochasticMatrix& a, std::span<const double> x) {
  require_size(a.size(), x.size(), "apply");
  std::vector<double> y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0.0;
    for (const Entry& e : a.row(i)) s += e.weight * x[e.col];
    y[i] = s;
  }
  return y;
}

std::vector<double> apply(const GoogleMatrix& a, std::span<const double> x) {
  const double c = a.damping();
  std::vector<double> y = apply(a.link_matrix(), x);
  for (double& v : y) v *= c;
  if (const SimplexVector* z = a.teleport_vector()) {
    const double projection = (1.0 - c) * dot(x, z->values());
    for (double& v : y) v += projection;
  } else {
    const std::vector<double> ex = apply(*a.general_teleport(), x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += (1.0 - c) * ex[i];
  }
  return y;
}

double norm1(std::span<const double> x) noexcept {
  double s = 0.0;
  for (double v : x) s += std::abs(v);
  return s;
}

double sum(std::span<const double> x) noexcept {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

double dot(std::span<const double> x, std::span<const double> y) {
  require_size(x.size(), y.size(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

DenseMatrix densify(const StochasticMatrix& a, std::size_t cap) {
  require_cap(a.size(), cap);
  DenseMatrix d(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const Entry& e : a.row(i)) d(i, e.col) = e.weight;
  return d;
}

DenseMatrix densify(const GoogleMatrix& a, std::size_t cap) {
  require_cap(a.size(), cap);
  const double c = a.damping();
  DenseMatrix d = c * densify(a.link_matrix(), cap);
  if (const SimplexVector* z = a.teleport_vector()) {
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) += (1.0 - c) * (*z)[j];
  } else {
    d += (1.0 - c) * densify(*a.general_teleport(), cap);
  }
  return d;
}

RowSumReport row_sum_report(const DenseMatrix& m) noexcept {
  RowSumReport r;
  r.min_entry = m.data().empty() ? 0.0 : m.data().front();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (double v : m.row(i)) {
      s += v;
      r.min_entry = std::min(r.min_entry, v);
    }
    r.max_row_sum_error = std::max(r.max_row_sum_error, std::abs(s - 1.0));
  }
  return r;
}

}  // namespace ergogap
