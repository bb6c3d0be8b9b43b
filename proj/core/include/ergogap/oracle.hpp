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

#include <complex>
#include <cstddef>
#include <vector>

#include "ergogap/dense.hpp"
#include "ergogap/stochastic.hpp"

namespace ergogap {

inline constexpr std::size_t kDefaultOracleCap = 64;

/// All eigenvalues with algebraic multiplicity, sorted by non-increasing
/// modulus; moduli equal to within 1e-9 are ordered by real part, then
/// imaginary part, both descending.
struct Spectrum {
  std::vector<std::complex<double>> eigenvalues;

  std::size_t size() const noexcept { return eigenvalues.size(); }
};

/// Dense nonsymmetric eigensolver: balancing, reduction to Hessenberg form by
/// stabilized elimination, then Francis double-shift QR on the real Schur
/// form.
///
/// Errors: NonSquare, EmptyMatrix, DimensionCapExceeded, NoConvergence.
Spectrum eigenvalues_dense(const DenseMatrix& m, std::size_t cap = kDefaultOracleCap);

/// Modulus of the second sorted eigenvalue; 0 for n = 1.
double second_modulus(const DenseMatrix& m, std::size_t cap = kDefaultOracleCap);
double second_modulus(const StochasticMatrix& m, std::size_t cap = kDefaultOracleCap);

struct NullSpace {
  std::size_t rank = 0;
  /// Columns spanning the null space, one vector per entry.
  std::vector<std::vector<double>> basis;
};

/// Gaussian elimination with complete pivoting. A pivot counts as zero when
/// its magnitude is at most rel_threshold * max|m_ij|.
NullSpace null_space(const DenseMatrix& m, double rel_threshold = 1e-9);

/// dim{y : P y = y} = n - rank(P - I).
std::size_t fixed_space_dimension(const StochasticMatrix& p, std::size_t cap = kDefaultOracleCap);
std::size_t fixed_space_dimension(const DenseMatrix& p, std::size_t cap = kDefaultOracleCap);

/// A basis of {y : P y = y}.
std::vector<std::vector<double>> fixed_space_basis(const StochasticMatrix& p,
                                                   std::size_t cap = kDefaultOracleCap);

/// True iff the sorted spectra of M and M^t agree pairwise within 1e-7.
bool transpose_spectrum_check(const DenseMatrix& m, std::size_t cap = kDefaultOracleCap);

/// Solves M x = b with partial pivoting. Throws SingularSystem.
std::vector<double> solve_linear(DenseMatrix m, std::vector<double> b);

/// The stationary distribution of A: (A^t - I) v = 0 with sum(v) = 1, solved
/// directly. Throws SingularSystem if it is not unique.
std::vector<double> stationary_vector_dense(const DenseMatrix& a,
                                            std::size_t cap = kDefaultOracleCap);

}  // namespace ergogap
