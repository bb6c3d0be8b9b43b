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
#include <vector>

#include "ergogap/dobrushin.hpp"
#include "ergogap/error.hpp"
#include "ergogap/stochastic.hpp"

namespace ergogap {

struct StationaryOptions {
  double tol = 1e-10;
  /// Largest power m tried when looking for q(A^m) < 1.
  std::size_t max_m = 8;
  std::size_t max_iters = 100000;
  std::size_t pair_cap = kDefaultPairCap;
  /// Powers m >= 2 are formed densely and need n <= dense_cap.
  std::size_t dense_cap = kDefaultDenseCap;
};

/// Result of power iteration with the map y -> (A^t)^m y, which contracts the
/// simplex in L1 with rate kappa = q(A^m) < 1.
struct ContractionCertificate {
  std::size_t m = 1;
  double kappa = 0.0;
  std::size_t iterations = 0;
  /// kappa^j / (1 - kappa) * |y_1 - y_0|_1, widened by the rounding terms
  /// below.
  double a_priori_bound = 0.0;
  /// kappa / (1 - kappa) * |y_j - y_{j-1}|_1 + rounding_allowance * (1 / (1 -
  /// kappa) + 1); bounds |x_star - v|_1 for the computed iterates.
  double a_posteriori_bound = 0.0;
  /// L1 bound on the floating-point error of one computed step.
  double rounding_allowance = 0.0;
  bool converged = false;
  SimplexVector x_star = SimplexVector::uniform(1);
  /// |y_j - y_{j-1}|_1 for j = 1..iterations.
  std::vector<double> step_norms;
};

/// Raised when the iteration budget runs out. Carries the partial result.
class MaxItersExceeded : public Error {
 public:
  MaxItersExceeded(const std::string& message, ContractionCertificate partial)
      : Error(ErrorCode::kMaxItersExceeded, message), partial_(std::move(partial)) {}
  const ContractionCertificate& partial() const noexcept { return partial_; }

 private:
  ContractionCertificate partial_;
};

/// Smallest m <= max_m with q(A^m) < 1, and that q. Throws NoContraction.
struct ContractionPower {
  std::size_t m = 1;
  double kappa = 0.0;
};
ContractionPower find_contraction_power(const StochasticMatrix& a, const StationaryOptions& options = {});
ContractionPower find_contraction_power(const GoogleMatrix& a, const StationaryOptions& options = {});

/// Iterates from x0 until the a-posteriori bound drops to tol. The returned
/// x_star satisfies |x_star - v|_1 <= a_posteriori_bound <= tol where v is the
/// unique stationary distribution.
///
/// Errors: NoContraction, MaxItersExceeded, DimensionMismatch,
/// InvalidArgument (tol <= 0).
ContractionCertificate stationary_distribution(const StochasticMatrix& a, const SimplexVector& x0,
                                               const StationaryOptions& options = {});
ContractionCertificate stationary_distribution(const GoogleMatrix& a, const SimplexVector& x0,
                                               const StationaryOptions& options = {});

/// |A^t x - x|_1.
double fixed_point_residual(const StochasticMatrix& a, std::span<const double> x);
double fixed_point_residual(const GoogleMatrix& a, std::span<const double> x);

}  // namespace ergogap
