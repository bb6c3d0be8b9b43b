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

#include "ergogap/stationary.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ergogap {

namespace {

template <typename Matrix>
ContractionPower find_power(const Matrix& a, const StationaryOptions& options) {
  CoefficientOptions coeff;
  coeff.pair_cap = options.pair_cap;
  const double q1 = dobrushin_coefficient(a, coeff).q;
  if (q1 < 1.0) return {1, q1};
  if (options.max_m < 2) {
    throw Error(ErrorCode::kNoContraction,
                "q(A) = 1 and max_m = 1; the stationary vector may not be unique, "
                "inspect the closed subsets with `scc`");
  }

  const DenseMatrix base = densify(a, options.dense_cap);
  DenseMatrix power = base;
  coeff.form = CoefficientForm::kHalfL1;
  for (std::size_t m = 2; m <= options.max_m; ++m) {
    power = multiply(power, base);
    const double q = dobrushin_coefficient(power, coeff).q;
    if (q < 1.0) return {m, q};
  }
  throw Error(ErrorCode::kNoContraction,
              "q(A^m) = 1 for every m <= " + std::to_string(options.max_m) +
                  "; the chain may have several closed subsets or be periodic, "
                  "inspect it with `scc`");
}

template <typename Matrix>
ContractionCertificate iterate(const Matrix& a, const SimplexVector& x0,
                               const StationaryOptions& options) {
  if (x0.size() != a.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "x0 length differs from matrix dimension");
  }
  if (!(options.tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tol must be positive");

  const ContractionPower power = find_power(a, options);
  const double kappa = power.kappa;
  const double ratio = kappa / (1.0 - kappa);

  ContractionCertificate cert;
  cert.m = power.m;
  cert.kappa = kappa;
  // One computed step is the exact map plus an error of at most eps_step in
  // L1: m sparse products and a renormalization, each accurate to about
  // (n + 3) u. Doubled for headroom.
  const double eps_step = 2.0 * static_cast<double>(power.m + 1) *
                          static_cast<double>(a.size() + 3) *
                          (std::numeric_limits<double>::epsilon() / 2.0);
  cert.rounding_allowance = eps_step;

  auto step = [&](std::vector<double> y) {
    for (std::size_t r = 0; r < power.m; ++r) y = apply_transpose(a, y);
    // Pull rounding drift back onto the simplex.
    double s = 0.0;
    for (double& v : y) {
      if (v < 0.0) v = 0.0;
      s += v;
    }
    for (double& v : y) v /= s;
    return y;
  };

  std::vector<double> prev(x0.values().begin(), x0.values().end());
  double first_step = 0.0;
  cert.a_posteriori_bound = std::numeric_limits<double>::infinity();
  while (cert.iterations < options.max_iters) {
    std::vector<double> next = step(prev);
    double diff = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) diff += std::abs(next[i] - prev[i]);
    ++cert.iterations;
    cert.step_norms.push_back(diff);
    if (cert.iterations == 1) first_step = diff;
    // With y_j = T(y_{j-1}) + d_j and |d_j| <= eps_step:
    //   |y_j - v| <= (kappa |y_j - y_{j-1}| + eps_step) / (1 - kappa)
    //   |y_j - v| <= kappa^j (|y_1 - y_0| + eps_step) / (1 - kappa) + eps_step / (1 - kappa)
    // and the final renormalization of x_star adds one more eps_step.
    cert.a_posteriori_bound = ratio * diff + eps_step / (1.0 - kappa) + eps_step;
    cert.a_priori_bound = std::pow(kappa, static_cast<double>(cert.iterations)) / (1.0 - kappa) *
                              (first_step + eps_step) +
                          eps_step / (1.0 - kappa) + eps_step;
    prev = std::move(next);
    if (cert.a_posteriori_bound <= options.tol) {
      cert.converged = true;
      break;
    }
  }
  cert.x_star = SimplexVector::make(std::move(prev), 1e-9);
  if (!cert.converged) {
    throw MaxItersExceeded("a-posteriori bound " + std::to_string(cert.a_posteriori_bound) +
                               " still above tol after " + std::to_string(cert.iterations) +
                               " iterations",
                           std::move(cert));
  }
  return cert;
}

template <typename Matrix>
double residual(const Matrix& a, std::span<const double> x) {
  const std::vector<double> y = apply_transpose(a, x);
  double r = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) r += std::abs(y[i] - x[i]);
  return r;
}

}  // namespace

ContractionPower find_contraction_power(const StochasticMatrix& a, const StationaryOptions& options) {
  return find_power(a, options);
}

ContractionPower find_contraction_power(const GoogleMatrix& a, const StationaryOptions& options) {
  return find_power(a, options);
}

ContractionCertificate stationary_distribution(const StochasticMatrix& a, const SimplexVector& x0,
                                               const StationaryOptions& options) {
  return iterate(a, x0, options);
}

ContractionCertificate stationary_distribution(const GoogleMatrix& a, const SimplexVector& x0,
                                               const StationaryOptions& options) {
  return iterate(a, x0, options);
}

double fixed_point_residual(const StochasticMatrix& a, std::span<const double> x) {
  return residual(a, x);
}

double fixed_point_residual(const GoogleMatrix& a, std::span<const double> x) {
  return residual(a, x);
}

}  // namespace ergogap
