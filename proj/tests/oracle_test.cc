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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ergogap/error.hpp"
#include "ergogap/oracle.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace ergogap {
namespace {

using testing::Rng;
using cd = std::complex<double>;

TEST(Eigenvalues, TwoByTwoStochastic) {
  // trace 1.25, det 0.25 -> {1, 0.25}
  const auto s = eigenvalues_dense(DenseMatrix::from_rows({{0.5, 0.5}, {0.25, 0.75}}));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(std::abs(s.eigenvalues[0] - cd(1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(s.eigenvalues[1] - cd(0.25)), 0.0, 1e-14);
}

TEST(Eigenvalues, Permutations) {
  const auto s2 = eigenvalues_dense(DenseMatrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_NEAR(std::abs(s2.eigenvalues[0] - cd(1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(s2.eigenvalues[1] - cd(-1.0)), 0.0, 1e-14);

  const auto s3 = eigenvalues_dense(DenseMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  const double h = std::sqrt(3.0) / 2.0;
  ASSERT_EQ(s3.size(), 3u);
  EXPECT_NEAR(std::abs(s3.eigenvalues[0] - cd(1.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s3.eigenvalues[1] - cd(-0.5, h)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s3.eigenvalues[2] - cd(-0.5, -h)), 0.0, 1e-12);
  for (const auto& e : s3.eigenvalues) EXPECT_NEAR(std::abs(e), 1.0, 1e-12);
}

TEST(Eigenvalues, LargerCyclicPermutation) {
  const std::size_t n = 7;
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, (i + 1) % n) = 1.0;
  const auto s = eigenvalues_dense(m);
  for (const auto& e : s.eigenvalues) EXPECT_NEAR(std::abs(e), 1.0, 1e-10);
  EXPECT_NEAR(std::abs(s.eigenvalues[0] - cd(1.0)), 0.0, 1e-10);
}

TEST(Eigenvalues, Errors) {
  try {
    eigenvalues_dense(DenseMatrix(65, 65));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionCapExceeded);
  }
  try {
    eigenvalues_dense(DenseMatrix(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonSquare);
  }
}

TEST(Eigenvalues, StructuralZerosGiveExactEigenvalues) {
  // A^2 has identical rows, so lambda = 0 is defective with a Jordan block of
  // size 2. Plain QR would return +-sqrt(eps) for it.
  const auto m = DenseMatrix::from_rows({{1, 0, 0, 0, 0},
                                         {0, 0, 1, 0, 0},
                                         {1, 0, 0, 0, 0},
                                         {0, 0, 1, 0, 0},
                                         {0, 0, 1, 0, 0}});
  const auto s = eigenvalues_dense(m);
  EXPECT_EQ(s.eigenvalues[0], cd(1.0));
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_EQ(s.eigenvalues[i], cd(0.0));
  // Upper triangular: eigenvalues are the diagonal.
  const auto t = eigenvalues_dense(DenseMatrix::from_rows({{0.5, 0.3, 0.2}, {0, 0.9, 0.1}, {0, 0, 1}}));
  EXPECT_EQ(t.eigenvalues[0], cd(1.0));
  EXPECT_EQ(t.eigenvalues[1], cd(0.9));
  EXPECT_EQ(t.eigenvalues[2], cd(0.5));
}

TEST(Eigenvalues, AgreeWithReferenceSolver) {
  Rng rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform_int(rng, 1, 40);
    const DenseMatrix m = trial % 3 == 0 ? testing::random_dense(rng, n)
                                         : testing::random_dense_stochastic(rng, n, 0.5 + 0.5 * testing::uniform01(rng));
    const auto ours = eigenvalues_dense(m).eigenvalues;
    EXPECT_TRUE(testing::spectra_match(ours, testing::reference_eigenvalues(m), 1e-7))
        << "trial " << trial << " n=" << n;
  }
}

// Sparse chains often carry a defective eigenvalue 0 whose computed cluster
// is noise of size eps^(1/k). Only the leading moduli are comparable there.
TEST(Eigenvalues, SparseLeadingModuliAgree) {
  Rng rng(124);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = testing::uniform_int(rng, 2, 40);
    const auto m = testing::random_dense_stochastic(rng, n, 0.5 * testing::uniform01(rng));
    const auto ours = eigenvalues_dense(m).eigenvalues;
    const auto ref = testing::reference_eigenvalues(m);
    EXPECT_NEAR(std::abs(ours[0]), 1.0, 1e-9);
    if (std::abs(ref[1]) < 0.05) continue;
    EXPECT_NEAR(std::abs(ours[1]), std::abs(ref[1]), 1e-6) << "trial " << trial << " n=" << n;
  }
}

TEST(Eigenvalues, SortedByModulusThenRealPart) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = testing::random_dense(rng, testing::uniform_int(rng, 2, 20));
    const auto ev = eigenvalues_dense(m).eigenvalues;
    for (std::size_t i = 1; i < ev.size(); ++i) EXPECT_GE(std::abs(ev[i - 1]) + 1e-9, std::abs(ev[i]));
  }
  // Conjugate pair: positive imaginary part first.
  const auto rot = eigenvalues_dense(DenseMatrix::from_rows({{0, -1}, {1, 0}}));
  EXPECT_GT(rot.eigenvalues[0].imag(), 0.0);
}

TEST(SecondModulus, Examples) {
  EXPECT_NEAR(second_modulus(DenseMatrix::from_rows({{0.2, 0.8}, {0.2, 0.8}})), 0.0, 1e-14);
  EXPECT_NEAR(second_modulus(StochasticMatrix::identity(4)), 1.0, 1e-14);
  EXPECT_EQ(second_modulus(StochasticMatrix::identity(1)), 0.0);
  const auto g = build_google(StochasticMatrix::identity(2), 0.85, SimplexVector::uniform(2));
  EXPECT_NEAR(second_modulus(densify(g)), 0.85, 1e-14);
}

TEST(FixedSpace, Examples) {
  Rng rng(9);
  EXPECT_EQ(fixed_space_dimension(testing::random_stochastic(rng, 6)), 1u);
  const auto two = testing::structured_chain(rng, {2, 2}, 0, 0.5, false);
  EXPECT_EQ(fixed_space_dimension(two.matrix), 2u);
  EXPECT_EQ(fixed_space_dimension(StochasticMatrix::identity(5)), 5u);
}

TEST(FixedSpace, BasisVectorsAreFixed) {
  Rng rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const auto chain = testing::random_structured_chain(rng);
    const auto basis = fixed_space_basis(chain.matrix);
    EXPECT_EQ(basis.size(), chain.closed_classes);
    for (const auto& v : basis) {
      const auto pv = ergogap::apply(chain.matrix, v);
      double diff = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) diff += std::abs(pv[i] - v[i]);
      EXPECT_LE(diff, 1e-12 * norm1(v));
    }
  }
}

TEST(TransposeSpectrum, Examples) {
  Rng rng(55);
  EXPECT_TRUE(transpose_spectrum_check(testing::random_dense_stochastic(rng, 5)));
  EXPECT_TRUE(transpose_spectrum_check(DenseMatrix::from_rows({{2, 1}, {1, 3}})));
  EXPECT_TRUE(transpose_spectrum_check(DenseMatrix::from_rows({{0, 1}, {1, 0}})));
}

TEST(StationaryDense, SolvesBalance) {
  const auto v = stationary_vector_dense(DenseMatrix::from_rows({{0.5, 0.5}, {0.25, 0.75}}));
  // pi P = pi: pi = (1/3, 2/3)
  EXPECT_NEAR(v[0], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(v[1], 2.0 / 3.0, 1e-15);
  try {
    stationary_vector_dense(DenseMatrix::identity(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularSystem);
  }
}

// Leading eigenvalue of a stochastic matrix is 1, e is a right eigenvector
// and |A^t|_1 = 1.
TEST(Properties, StochasticSpectralFacts) {
  Rng rng(66);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = testing::uniform_int(rng, 1, 24);
    const auto d = testing::random_dense_stochastic(rng, n, testing::uniform01(rng));
    const auto s = eigenvalues_dense(d);
    EXPECT_NEAR(std::abs(s.eigenvalues[0] - cd(1.0)), 0.0, 1e-8);
    for (const auto& e : s.eigenvalues) EXPECT_LE(std::abs(e), 1.0 + 1e-8);

    const auto ae = multiply(d, std::vector<double>(n, 1.0));
    double diff = 0.0;
    for (double v : ae) diff += std::abs(v - 1.0);
    EXPECT_LE(diff, 1e-10);

    // |A^t|_1 = max column sum of |A^t| = max row sum of A.
    double col_max = 0.0;
    const auto t = d.transpose();
    for (std::size_t j = 0; j < n; ++j) {
      double c = 0.0;
      for (std::size_t i = 0; i < n; ++i) c += std::abs(t(i, j));
      col_max = std::max(col_max, c);
    }
    EXPECT_NEAR(col_max, 1.0, 1e-12);
  }
}

TEST(Properties, FixedSpaceMatchesUnitEigenvalueCount) {
  Rng rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const auto chain = testing::random_structured_chain(rng);
    const auto s = eigenvalues_dense(densify(chain.matrix));
    std::size_t ones = 0;
    for (const auto& e : s.eigenvalues) ones += std::abs(e - cd(1.0)) <= 1e-7 ? 1 : 0;
    EXPECT_EQ(fixed_space_dimension(chain.matrix), ones) << "trial " << trial;
  }
}

}  // namespace
}  // namespace ergogap
