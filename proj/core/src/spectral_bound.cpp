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

#include "ergogap/spectral_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ergogap/error.hpp"

namespace ergogap {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2.0;

void check_damping(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw Error(ErrorCode::kDampingOutOfRange, "damping factor must lie in [0, 1]");
  }
}

// Iterative Tarjan. Returns the component id of every node; ids are assigned
// in the order components are completed (reverse topological order).
std::vector<std::size_t> strongly_connected(const StochasticMatrix& p, double threshold,
                                            std::size_t& component_count) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = p.size();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  struct Frame {
    std::size_t node;
    std::size_t next;  // position in the row
  };
  std::vector<Frame> call;
  std::size_t counter = 0;
  component_count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      const auto row = p.row(f.node);
      if (f.next < row.size()) {
        const Entry& e = row[f.next++];
        if (!(e.weight > threshold)) continue;
        const std::size_t w = e.col;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const std::size_t v = f.node;
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = component_count;
        } while (w != v);
        ++component_count;
      }
    }
  }
  return comp;
}

}  // namespace

std::string_view to_string(CertificateSource source) noexcept {
  switch (source) {
    case CertificateSource::kPowerSequence: return "theorem1_sequence";
    case CertificateSource::kMixture: return "corollary1_mixture";
    case CertificateSource::kRankOneMixture: return "corollary1_rank1";
    case CertificateSource::kExactDamping: return "corollary2_exact";
  }
  return "theorem1_sequence";
}

std::optional<CertificateSource> parse_certificate_source(std::string_view name) noexcept {
  for (auto s : {CertificateSource::kPowerSequence, CertificateSource::kMixture,
                 CertificateSource::kRankOneMixture, CertificateSource::kExactDamping}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

double power_rounding_allowance(std::size_t n, std::size_t k) noexcept {
  // Every product and re-projection perturbs a difference row by at most
  // about 2 (gamma_n + u) times its L1 norm (<= 2), and A^t never expands L1.
  // Summed over k steps plus the final pairwise scan this stays below
  // 4 (k + 1) n u; 5 leaves headroom for gamma_n > n u.
  return 5.0 * static_cast<double>(k + 1) * static_cast<double>(n) * kUnitRoundoff;
}

SpectralCertificate certificate_sequence(const DenseMatrix& a, std::size_t k_max,
                                         const SequenceOptions& options) {
  if (k_max == 0) throw Error(ErrorCode::kKMaxZero, "k_max must be at least 1");
  if (!a.square()) throw Error(ErrorCode::kNonSquare, "certificate needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) throw Error(ErrorCode::kEmptyMatrix, "matrix has no rows");
  if (n > options.dense_cap) {
    throw Error(ErrorCode::kDimensionCapExceeded,
                "dimension " + std::to_string(n) + " exceeds dense cap " +
                    std::to_string(options.dense_cap));
  }
  if (n > options.pair_cap) {
    throw Error(ErrorCode::kPairCapExceeded,
                "n = " + std::to_string(n) + " exceeds pair cap " + std::to_string(options.pair_cap));
  }
  const RowSumReport check = row_sum_report(a);
  if (check.min_entry < -options.stochastic_check_tol) {
    throw Error(ErrorCode::kNegativeWeight, "matrix has a negative entry");
  }
  if (check.max_row_sum_error > options.stochastic_check_tol) {
    throw Error(ErrorCode::kRowSumOutOfTolerance,
                "row sum error " + std::to_string(check.max_row_sum_error));
  }

  // Row i of diff holds (e_i - e_last)^t A^k. Pairwise row distances of A^k are
  // distances between these rows (the last one being 0), and they shrink with
  // A^k instead of being recovered by cancelling two nearly equal rows, so the
  // error stays relative to q(A^k) rather than to 1.
  const std::size_t last = n - 1;
  DenseMatrix diff(last, n);
  for (std::size_t i = 0; i < last; ++i) {
    diff(i, i) = 1.0;
    diff(i, last) = -1.0;
  }

  SpectralCertificate cert;
  cert.source = CertificateSource::kPowerSequence;
  cert.entries.reserve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    diff = multiply(diff, a);
    // Rows are zero-sum in exact arithmetic; removing the rounding drift keeps
    // it from riding along uncontracted.
    for (std::size_t i = 0; i < last; ++i) {
      const auto row = diff.row(i);
      double mean = 0.0;
      for (double v : row) mean += v;
      mean /= static_cast<double>(n);
      for (double& v : row) v -= mean;
    }
    double widest = 0.0;
    for (std::size_t i = 0; i < last; ++i) {
      const auto ri = diff.row(i);
      double own = 0.0;
      for (double v : ri) own += std::abs(v);
      widest = std::max(widest, own);
      for (std::size_t j = i + 1; j < last; ++j) {
        const auto rj = diff.row(j);
        double d = 0.0;
        for (std::size_t c = 0; c < n; ++c) d += std::abs(ri[c] - rj[c]);
        widest = std::max(widest, d);
      }
    }
    CertificateEntry e;
    e.k = k;
    e.q_k = std::clamp(0.5 * widest, 0.0, 1.0);
    e.rounding_allowance = power_rounding_allowance(n, k);
    e.bound_k = std::pow(std::min(1.0, e.q_k + e.rounding_allowance),
                         1.0 / static_cast<double>(k));
    cert.entries.push_back(e);
  }
  cert.best_bound = 1.0;
  for (const CertificateEntry& e : cert.entries) cert.best_bound = std::min(cert.best_bound, e.bound_k);
  return cert;
}

SpectralCertificate certificate_sequence(const StochasticMatrix& a, std::size_t k_max,
                                         const SequenceOptions& options) {
  if (k_max == 0) throw Error(ErrorCode::kKMaxZero, "k_max must be at least 1");
  return certificate_sequence(densify(a, options.dense_cap), k_max, options);
}

SpectralCertificate certificate_sequence(const GoogleMatrix& a, std::size_t k_max,
                                         const SequenceOptions& options) {
  if (k_max == 0) throw Error(ErrorCode::kKMaxZero, "k_max must be at least 1");
  return certificate_sequence(densify(a, options.dense_cap), k_max, options);
}

SpectralCertificate mixture_bound(const StochasticMatrix& p, const SimplexVector& z, double c,
                                  const CoefficientOptions& options) {
  check_damping(c);
  if (z.size() != p.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "teleportation vector length differs from P");
  }
  const double q_link = dobrushin_coefficient(p, options).q;
  SpectralCertificate cert;
  cert.source = CertificateSource::kRankOneMixture;
  cert.mixture = MixtureTerms{c, q_link, 0.0, true};
  cert.best_bound = c * q_link;
  cert.entries.push_back({1, cert.best_bound, 0.0, cert.best_bound});
  cert.headline_bound = c;
  return cert;
}

SpectralCertificate mixture_bound(const StochasticMatrix& p, const StochasticMatrix& e, double c,
                                  const CoefficientOptions& options) {
  check_damping(c);
  if (e.size() != p.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "teleportation matrix dimension differs from P");
  }
  const double q_link = dobrushin_coefficient(p, options).q;
  const double q_teleport = dobrushin_coefficient(e, options).q;
  SpectralCertificate cert;
  cert.source = CertificateSource::kMixture;
  cert.mixture = MixtureTerms{c, q_link, q_teleport, false};
  cert.best_bound = std::min(1.0, c * q_link + (1.0 - c) * q_teleport);
  cert.entries.push_back({1, cert.best_bound, 0.0, cert.best_bound});
  return cert;
}

SpectralCertificate mixture_bound(const GoogleMatrix& a, const CoefficientOptions& options) {
  if (const SimplexVector* z = a.teleport_vector()) {
    return mixture_bound(a.link_matrix(), *z, a.damping(), options);
  }
  return mixture_bound(a.link_matrix(), *a.general_teleport(), a.damping(), options);
}

ClosedSubsetReport closed_subsets(const StochasticMatrix& p, double zero_threshold) {
  if (!(zero_threshold >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "zero_threshold must be nonnegative");
  }
  std::size_t count = 0;
  const std::vector<std::size_t> comp = strongly_connected(p, zero_threshold, count);

  std::vector<bool> terminal(count, true);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (const Entry& e : p.row(i)) {
      if (e.weight > zero_threshold && comp[e.col] != comp[i]) terminal[comp[i]] = false;
    }
  }
  // Group members, then order components by their smallest node.
  std::vector<std::vector<std::size_t>> members(count);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (terminal[comp[i]]) members[comp[i]].push_back(i);
  }
  ClosedSubsetReport report;
  report.zero_threshold = zero_threshold;
  for (auto& m : members) {
    if (!m.empty()) report.terminal_components.push_back(std::move(m));
  }
  std::sort(report.terminal_components.begin(), report.terminal_components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  report.count = report.terminal_components.size();
  return report;
}

SpectralCertificate exactness_check(const StochasticMatrix& p, const SimplexVector& z, double c,
                                    const CoefficientOptions& options) {
  check_damping(c);
  if (z.size() != p.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "teleportation vector length differs from P");
  }
  if (closed_subsets(p).count < 2) return mixture_bound(p, z, c, options);

  SpectralCertificate cert;
  cert.source = CertificateSource::kExactDamping;
  cert.best_bound = c;
  cert.exact = true;
  cert.headline_bound = c;
  return cert;
}

std::vector<double> construct_second_eigenvector(std::span<const double> v,
                                                 std::span<const double> w,
                                                 const SimplexVector& z,
                                                 const StochasticMatrix& p, double c) {
  check_damping(c);
  const std::size_t n = p.size();
  if (v.size() != n || w.size() != n || z.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "vectors must have length n");
  }
  for (auto x : {v, w}) {
    const std::vector<double> px = apply(p, x);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff += std::abs(px[i] - x[i]);
    if (!(diff <= 1e-8 * norm1(x)) || norm1(x) == 0.0) {
      throw Error(ErrorCode::kNotFixedVector, "argument is not a fixed vector of P");
    }
  }
  const double nv = norm1(v);
  const double nw = norm1(w);

  // Independence, scale free: |sin(angle)|^2 between v and w.
  const double vv = dot(v, v);
  const double ww = dot(w, w);
  const double vw = dot(v, w);
  if (vv * ww - vw * vw <= 1e-12 * vv * ww) {
    throw Error(ErrorCode::kDependentVectors, "fixed vectors are linearly dependent");
  }

  const double vz = dot(v, z.values());
  const double wz = dot(w, z.values());
  if (std::abs(vz) <= 1e-12 * nv) return {v.begin(), v.end()};
  if (std::abs(wz) <= 1e-12 * nw) return {w.begin(), w.end()};

  std::vector<double> xi(n);
  for (std::size_t i = 0; i < n; ++i) xi[i] = -wz * v[i] + vz * w[i];
  if (norm1(xi) <= 1e-12 * (nv + nw)) {
    throw Error(ErrorCode::kDependentVectors, "constructed vector vanishes");
  }
  return xi;
}

}  // namespace ergogap
