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

#include "ergogap/dobrushin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ergogap/error.hpp"

namespace ergogap {

namespace {

void check_pair_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorCode::kPairCapExceeded, "dimension " + std::to_string(n) +
                                                 " exceeds pair cap " + std::to_string(cap));
  }
}

// Visits every unordered pair i < k in lexicographic order and keeps the
// first pair that attains the extremum, so ties resolve deterministically.
template <typename Score>
CoefficientResult extremal_pair(std::size_t n, CoefficientForm form, Score score) {
  CoefficientResult r;
  r.form = form;
  if (n < 2) return r;

  const bool maximize = form == CoefficientForm::kHalfL1;
  double best = maximize ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const double s = score(i, k);
      if (maximize ? s > best : s < best) {
        best = s;
        r.argmax_pair = {i, k};
      }
    }
  }
  r.q = maximize ? 0.5 * best : 1.0 - best;
  r.q = std::clamp(r.q, 0.0, 1.0);
  return r;
}

}  // namespace

std::string_view to_string(CoefficientForm form) noexcept {
  return form == CoefficientForm::kHalfL1 ? "half_l1" : "one_minus_overlap";
}

double overlap(std::span<const Entry> a, std::span<const Entry> b) noexcept {
  double s = 0.0;
  std::size_t i = 0;
  std::size_t k = 0;
  while (i < a.size() && k < b.size()) {
    if (a[i].col < b[k].col) {
      ++i;
    } else if (b[k].col < a[i].col) {
      ++k;
    } else {
      s += std::min(a[i].weight, b[k].weight);
      ++i;
      ++k;
    }
  }
  return s;
}

double l1_distance(std::span<const Entry> a, std::span<const Entry> b) noexcept {
  double s = 0.0;
  std::size_t i = 0;
  std::size_t k = 0;
  while (i < a.size() || k < b.size()) {
    if (k == b.size() || (i < a.size() && a[i].col < b[k].col)) {
      s += std::abs(a[i++].weight);
    } else if (i == a.size() || b[k].col < a[i].col) {
      s += std::abs(b[k++].weight);
    } else {
      s += std::abs(a[i++].weight - b[k++].weight);
    }
  }
  return s;
}

CoefficientResult dobrushin_coefficient(const StochasticMatrix& b,
                                        const CoefficientOptions& options) {
  check_pair_cap(b.size(), options.pair_cap);
  const CoefficientForm form = options.form.value_or(CoefficientForm::kOneMinusOverlap);
  if (form == CoefficientForm::kHalfL1) {
    return extremal_pair(b.size(), form,
                         [&](std::size_t i, std::size_t k) { return l1_distance(b.row(i), b.row(k)); });
  }
  return extremal_pair(b.size(), form,
                       [&](std::size_t i, std::size_t k) { return overlap(b.row(i), b.row(k)); });
}

CoefficientResult dobrushin_coefficient(const GoogleMatrix& a, const CoefficientOptions& options) {
  if (const StochasticMatrix* e = a.general_teleport()) {
    check_pair_cap(a.size(), options.pair_cap);
    return dobrushin_coefficient(mix(a.link_matrix(), *e, a.damping()), options);
  }
  CoefficientResult r = dobrushin_coefficient(a.link_matrix(), options);
  r.q *= a.damping();
  return r;
}

CoefficientResult dobrushin_coefficient(const DenseMatrix& b, const CoefficientOptions& options) {
  if (!b.square()) throw Error(ErrorCode::kNonSquare, "coefficient needs a square matrix");
  if (b.rows() == 0) throw Error(ErrorCode::kEmptyMatrix, "coefficient of an empty matrix");
  check_pair_cap(b.rows(), options.pair_cap);
  const CoefficientForm form = options.form.value_or(CoefficientForm::kHalfL1);
  const std::size_t n = b.rows();
  if (form == CoefficientForm::kHalfL1) {
    return extremal_pair(n, form, [&](std::size_t i, std::size_t k) {
      const auto ri = b.row(i);
      const auto rk = b.row(k);
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += std::abs(ri[j] - rk[j]);
      return s;
    });
  }
  return extremal_pair(n, form, [&](std::size_t i, std::size_t k) {
    const auto ri = b.row(i);
    const auto rk = b.row(k);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::min(ri[j], rk[j]);
    return s;
  });
}

double seminorm_q(const DenseMatrix& b) {
  if (!b.square()) throw Error(ErrorCode::kNonSquare, "seminorm_q needs a square matrix");
  const std::size_t n = b.rows();
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += std::abs(b(i, j) - b(k, j));
      best = std::max(best, s);
    }
  }
  return 0.5 * best;
}

}  // namespace ergogap
