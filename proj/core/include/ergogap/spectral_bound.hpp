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
#include <vector>

#include "ergogap/dense.hpp"
#include "ergogap/dobrushin.hpp"
#include "ergogap/stochastic.hpp"

namespace ergogap {

inline constexpr std::size_t kDefaultKMax = 32;

/// Which argument produced a certificate. The wire names are part of the
/// JSON report format.
enum class CertificateSource {
  kPowerSequence,   // "theorem1_sequence": inf_k q(A^k)^(1/k)
  kMixture,         // "corollary1_mixture": c q(P) + (1 - c) q(E)
  kRankOneMixture,  // "corollary1_rank1": c q(P) <= c
  kExactDamping,    // "corollary2_exact": lambda_2 = c
};

std::string_view to_string(CertificateSource source) noexcept;
std::optional<CertificateSource> parse_certificate_source(std::string_view name) noexcept;

struct CertificateEntry {
  std::size_t k = 0;
  /// q(A^k) as computed in floating point.
  double q_k = 0.0;
  /// Upper bound on the rounding error in q_k, folded into bound_k.
  double rounding_allowance = 0.0;
  /// min(1, q_k + rounding_allowance)^(1/k).
  double bound_k = 1.0;
};

struct MixtureTerms {
  double damping = 0.0;
  double q_link = 0.0;
  double q_teleport = 0.0;
  bool rank_one = false;
};

/// Upper bound (or exact value) for the modulus of the second eigenvalue.
struct SpectralCertificate {
  CertificateSource source = CertificateSource::kPowerSequence;
  std::vector<CertificateEntry> entries;
  double best_bound = 1.0;
  /// best_bound equals |lambda_2| and lambda_2 = best_bound is an eigenvalue.
  bool exact = false;
  std::optional<MixtureTerms> mixture;
  /// The damping factor, reported when teleportation is rank one.
  std::optional<double> headline_bound;
};

struct SequenceOptions {
  std::size_t dense_cap = kDefaultDenseCap;
  std::size_t pair_cap = kDefaultPairCap;
  /// Dense input must be row stochastic to within this tolerance.
  double stochastic_check_tol = 1e-9;
};

/// Records q(A^k) for k = 1..k_max and bound_k = (q(A^k) + allowance)^(1/k).
/// Every bound_k is an upper bound on |lambda_2|, and they converge to it as k
/// grows. q(A^k) is computed from the row differences (e_i - e_n)^t A^k, which
/// keeps it accurate relative to its own size even when it is far below 1.
///
/// Errors: KMaxZero, EmptyMatrix, NonSquare, DimensionCapExceeded,
/// PairCapExceeded, NegativeWeight / RowSumOutOfTolerance for dense input that
/// is not stochastic.
SpectralCertificate certificate_sequence(const DenseMatrix& a, std::size_t k_max,
                                         const SequenceOptions& options = {});
SpectralCertificate certificate_sequence(const StochasticMatrix& a, std::size_t k_max,
                                         const SequenceOptions& options = {});
SpectralCertificate certificate_sequence(const GoogleMatrix& a, std::size_t k_max,
                                         const SequenceOptions& options = {});

/// Rounding allowance used for q(A^k) of an n x n matrix.
double power_rounding_allowance(std::size_t n, std::size_t k) noexcept;

/// |lambda_2(c P + (1 - c) E)| <= c q(P) + (1 - c) q(E). With a teleportation
/// vector z, E = e z^t has q(E) = 0 and the bound drops to c q(P) <= c.
///
/// Errors: DampingOutOfRange, DimensionMismatch, PairCapExceeded.
SpectralCertificate mixture_bound(const StochasticMatrix& p, const SimplexVector& z, double c,
                                  const CoefficientOptions& options = {});
SpectralCertificate mixture_bound(const StochasticMatrix& p, const StochasticMatrix& e, double c,
                                  const CoefficientOptions& options = {});
SpectralCertificate mixture_bound(const GoogleMatrix& a, const CoefficientOptions& options = {});

/// Terminal strongly connected components of the graph i -> j iff
/// p_ij > zero_threshold. These are the irreducible closed subsets.
struct ClosedSubsetReport {
  /// Each component sorted ascending; components ordered by smallest member.
  std::vector<std::vector<std::size_t>> terminal_components;
  std::size_t count = 0;
  double zero_threshold = 0.0;
};

ClosedSubsetReport closed_subsets(const StochasticMatrix& p, double zero_threshold = 0.0);

/// With at least two closed subsets, lambda_2 = c exactly. Otherwise falls
/// back to mixture_bound().
SpectralCertificate exactness_check(const StochasticMatrix& p, const SimplexVector& z, double c,
                                    const CoefficientOptions& options = {});

/// Given two independent fixed vectors of P (P v = v, P w = w), returns a
/// vector xi with (c P + (1 - c) e z^t) xi = c xi:
///   v if <v, z> = 0, else w if <w, z> = 0, else -<w, z> v + <v, z> w.
///
/// Errors: DimensionMismatch, DampingOutOfRange, NotFixedVector,
/// DependentVectors.
std::vector<double> construct_second_eigenvector(std::span<const double> v,
                                                 std::span<const double> w,
                                                 const SimplexVector& z,
                                                 const StochasticMatrix& p, double c);

}  // namespace ergogap
