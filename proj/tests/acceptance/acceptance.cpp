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

// Acceptance suite. Each criterion prints one PASS/FAIL line; the exit code
// is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "ergogap/dobrushin.hpp"
#include "ergogap/oracle.hpp"
#include "ergogap/spectral_bound.hpp"
#include "ergogap/stationary.hpp"
#include "ergogap/stochastic.hpp"
#include "json.hpp"
#include "support/generators.hpp"

namespace {

using namespace ergogap;
using testing::Rng;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed check; only the first message is kept.
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double l1_diff(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

std::vector<StochasticMatrix> criterion1_matrices() {
  Rng rng(1001);
  std::vector<StochasticMatrix> out;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = testing::uniform_int(rng, 2, 16);
    out.push_back(testing::random_stochastic(rng, n, testing::uniform01(rng)));
  }
  return out;
}

CoefficientOptions form(CoefficientForm f) {
  CoefficientOptions o;
  o.form = f;
  return o;
}

void formula_equivalence(Verdict& v) {
  const auto t0 = Clock::now();
  const auto mats = criterion1_matrices();
  double worst = 0.0;
  for (const auto& b : mats) {
    const double q1 = dobrushin_coefficient(b, form(CoefficientForm::kHalfL1)).q;
    const double q2 = dobrushin_coefficient(b, form(CoefficientForm::kOneMinusOverlap)).q;
    worst = std::max(worst, std::abs(q1 - q2));
  }
  const double secs = seconds_since(t0);
  if (worst > 1e-12) v.fail("max |q_half_l1 - q_overlap| = " + std::to_string(worst));
  if (secs >= 5.0) v.fail("runtime " + std::to_string(secs) + " s");
  v.detail << "500 matrices, max delta " << worst << ", " << secs << " s";
}

void variational_tightness(Verdict& v) {
  Rng rng(1002);
  const auto mats = criterion1_matrices();
  double worst_excess = -1.0;
  double worst_witness = 0.0;
  for (const auto& b : mats) {
    const std::size_t n = b.size();
    const auto r = dobrushin_coefficient(b);
    for (int s = 0; s < 1000; ++s) {
      const auto y = testing::random_zero_sum(rng, n);
      const double ratio = norm1(apply_transpose(b, y)) / norm1(y);
      worst_excess = std::max(worst_excess, ratio - r.q);
    }
    const auto w = ZeroSumVector::half_difference(n, r.argmax_pair.first, r.argmax_pair.second);
    worst_witness = std::max(worst_witness, std::abs(norm1(apply_transpose(b, w.values())) - r.q));
  }
  if (worst_excess > 1e-12) v.fail("sampled ratio exceeds q by " + std::to_string(worst_excess));
  if (worst_witness > 1e-9) v.fail("witness misses q by " + std::to_string(worst_witness));
  v.detail << "max(ratio - q) " << worst_excess << ", max witness gap " << worst_witness;
}

void sequence_soundness(Verdict& v) {
  Rng rng(1003);
  double worst_raw = 1.0;
  double worst_cert = 1.0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = testing::uniform_int(rng, 2, 8);
    const auto a = testing::random_dense_stochastic(rng, n, 0.2 + 0.8 * testing::uniform01(rng));
    const double lambda2 = second_modulus(a);
    const auto cert = certificate_sequence(a, 20);
    for (const auto& e : cert.entries) {
      const double raw = std::pow(e.q_k, 1.0 / static_cast<double>(e.k));
      worst_raw = std::min(worst_raw, raw - lambda2);
      worst_cert = std::min(worst_cert, e.bound_k - lambda2);
    }
  }
  if (worst_raw < -1e-9) v.fail("q(A^k)^(1/k) below |lambda_2| by " + std::to_string(-worst_raw));
  if (worst_cert < -1e-9) v.fail("bound_k below |lambda_2| by " + std::to_string(-worst_cert));

  double worst_2x2 = 0.0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double a = i / 19.0;
      const double b = j / 19.0;
      const auto m = DenseMatrix::from_rows({{1 - a, a}, {b, 1 - b}});
      const double expected = std::abs(1 - a - b);
      worst_2x2 = std::max({worst_2x2, std::abs(dobrushin_coefficient(m).q - expected),
                            std::abs(second_modulus(m) - expected)});
    }
  }
  if (worst_2x2 > 1e-12) v.fail("2x2 family off by " + std::to_string(worst_2x2));
  v.detail << "300 matrices x 20 powers, min(q_k^(1/k) - |l2|) " << worst_raw
           << ", min(bound_k - |l2|) " << worst_cert << "; 2x2 grid max error " << worst_2x2;
}

void sequence_convergence(Verdict& v) {
  Rng rng(1004);
  int used = 0;
  int attempts = 0;
  double worst_gap = 0.0;
  while (used < 100 && attempts < 100000) {
    ++attempts;
    const std::size_t n = testing::uniform_int(rng, 3, 8);
    const auto a = testing::random_dense_stochastic(rng, n, 0.3 + 0.7 * testing::uniform01(rng));
    const auto ev = eigenvalues_dense(a).eigenvalues;
    const double l2 = std::abs(ev[1]);
    if (l2 - std::abs(ev[2]) < 0.1) continue;
    ++used;
    const auto cert = certificate_sequence(a, 64);
    double running = 1.0;
    double previous = 1.0;
    for (std::size_t k = 1; k <= 64; k *= 2) {
      running = std::min(running, cert.entries[k - 1].bound_k);
      if (running > previous) v.fail("running minimum increased at k=" + std::to_string(k));
      previous = running;
    }
    const double gap = running - l2;
    worst_gap = std::max(worst_gap, std::abs(gap));
    if (gap < -1e-9 || gap > std::max(0.1, 0.1 * l2)) {
      v.fail("final running minimum " + std::to_string(running) + " vs |lambda_2| " + std::to_string(l2));
    }
  }
  if (used < 100) v.fail("only " + std::to_string(used) + " matrices met the gap condition");
  v.detail << used << " matrices with |l2|-|l3| >= 0.1, max |min bound - |l2|| " << worst_gap;
}

void mixture(Verdict& v) {
  Rng rng(1005);
  const double dampings[] = {0.0, 0.5, 0.85, 0.99, 1.0};
  double worst_rank1 = -1.0;
  double worst_general = -1.0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = testing::uniform_int(rng, 2, 16);
    const auto p = testing::random_stochastic(rng, n, testing::uniform01(rng));
    const double c = dampings[t % 5];
    const auto z = testing::random_simplex(rng, n);
    const double l2 = second_modulus(densify(build_google(p, c, z)));
    worst_rank1 = std::max(worst_rank1, l2 - c);
    if (mixture_bound(p, z, c).best_bound > c) v.fail("rank-one certificate above c");

    const auto e = testing::random_stochastic(rng, n, testing::uniform01(rng));
    const double l2e = second_modulus(densify(build_google(p, c, e)));
    const double rhs = c * dobrushin_coefficient(p).q + (1 - c) * dobrushin_coefficient(e).q;
    worst_general = std::max(worst_general, l2e - rhs);
  }
  if (worst_rank1 > 1e-9) v.fail("rank-one |l2| exceeds c by " + std::to_string(worst_rank1));
  if (worst_general > 1e-9) v.fail("general |l2| exceeds mixture bound by " + std::to_string(worst_general));
  v.detail << "200 triples, max(|l2| - c) " << worst_rank1 << ", max(|l2| - cq(P) - (1-c)q(E)) "
           << worst_general;
}

void exact_damping(Verdict& v) {
  Rng rng(1006);
  double worst_eig = 0.0;
  double worst_mod = 0.0;
  double worst_res = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t a = testing::uniform_int(rng, 1, 6);
    const std::size_t b = testing::uniform_int(rng, 1, 6);
    const auto chain = testing::structured_chain(rng, {a, b}, testing::uniform_int(rng, 0, 4), 0.4);
    const std::size_t n = chain.matrix.size();
    const double c = 0.02 + 0.96 * testing::uniform01(rng);
    const auto z = testing::random_simplex(rng, n);
    const auto g = build_google(chain.matrix, c, z);
    const auto ev = eigenvalues_dense(densify(g)).eigenvalues;

    double nearest = 1.0;
    for (const auto& e : ev) nearest = std::min(nearest, std::abs(e - std::complex<double>(c, 0.0)));
    worst_eig = std::max(worst_eig, nearest);
    worst_mod = std::max(worst_mod, std::abs(std::abs(ev[1]) - c));

    if (!exactness_check(chain.matrix, z, c).exact) v.fail("exactness_check missed two closed classes");
    const auto basis = fixed_space_basis(chain.matrix);
    const auto xi = construct_second_eigenvector(basis[0], basis[1], z, chain.matrix, c);
    const auto axi = ergogap::apply(g, xi);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res += std::abs(axi[i] - c * xi[i]);
    worst_res = std::max(worst_res, res / norm1(xi));
  }
  if (worst_eig > 1e-9) v.fail("eigenvalue c missing, distance " + std::to_string(worst_eig));
  if (worst_mod > 1e-9) v.fail("|l2| differs from c by " + std::to_string(worst_mod));
  if (worst_res > 1e-10) v.fail("xi residual " + std::to_string(worst_res));
  v.detail << "100 constructions, max dist to c " << worst_eig << ", max ||l2|-c| " << worst_mod
           << ", max xi residual " << worst_res;
}

void closed_classes(Verdict& v) {
  Rng rng(1007);
  int mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    const auto chain = testing::random_structured_chain(rng, 16);
    if (closed_subsets(chain.matrix).count != fixed_space_dimension(chain.matrix)) ++mismatches;
  }
  if (mismatches > 0) v.fail(std::to_string(mismatches) + " mismatches");
  v.detail << "200 structured matrices, " << mismatches << " mismatches";
}

void certified_stationary(Verdict& v) {
  Rng rng(1008);
  double worst_err = 0.0;
  double worst_margin = 1.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = testing::uniform_int(rng, 2, 32);
    const auto p = testing::random_stochastic(rng, n, testing::uniform01(rng));
    const auto g = build_google(p, 0.85, testing::random_simplex(rng, n));
    StationaryOptions o;
    o.tol = 1e-10;
    const auto cert = stationary_distribution(g, SimplexVector::uniform(n), o);
    const double err = l1_diff(cert.x_star.values(), stationary_vector_dense(densify(g)));
    worst_err = std::max(worst_err, err);
    worst_margin = std::min({worst_margin, cert.a_priori_bound - err, cert.a_posteriori_bound - err});
  }
  if (worst_err > 1e-10) v.fail("true error " + std::to_string(worst_err));
  if (worst_margin < 0.0) v.fail("a bound fell below the true error");
  v.detail << "100 Google matrices, max true error " << worst_err << ", min bound margin " << worst_margin;
}

void invariance(Verdict& v) {
  Rng rng(1009);
  double worst_sum = 0.0;
  double worst_neg = 0.0;
  double worst_simplex_sum = 0.0;
  double worst_google = 0.0;
  double worst_row = 0.0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = testing::uniform_int(rng, 1, 32);
    const auto a = testing::random_stochastic(rng, n, testing::uniform01(rng));
    const auto y = ZeroSumVector::make(testing::random_zero_sum(rng, n, 10.0));
    worst_sum = std::max(worst_sum, std::abs(sum(apply_transpose(a, y.values()))) / static_cast<double>(n));

    const auto x = apply_transpose(a, testing::random_simplex_values(rng, n));
    for (double e : x) worst_neg = std::min(worst_neg, e);
    worst_simplex_sum = std::max(worst_simplex_sum, std::abs(sum(x) - 1.0));

    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (const auto& e : a.row(i)) s += e.weight;
      worst_row = std::max(worst_row, std::abs(s - 1.0));
    }

    const auto g = build_google(a, testing::uniform01(rng), testing::random_simplex(rng, n));
    const auto any = testing::random_simplex_values(rng, n);
    const auto fast = apply_transpose(g, any);
    const auto dense = multiply(densify(g).transpose(), any);
    for (std::size_t i = 0; i < n; ++i) worst_google = std::max(worst_google, std::abs(fast[i] - dense[i]));
  }
  if (worst_sum > 1e-10) v.fail("zero-sum drift per n " + std::to_string(worst_sum));
  if (worst_neg < -1e-14) v.fail("negative simplex entry " + std::to_string(worst_neg));
  if (worst_simplex_sum > 1e-10) v.fail("simplex sum drift " + std::to_string(worst_simplex_sum));
  if (worst_google > 1e-12) v.fail("Google apply_transpose mismatch " + std::to_string(worst_google));
  if (worst_row > 1e-10) v.fail("row sum error " + std::to_string(worst_row));
  v.detail << "200 cases each: zero-sum drift/n " << worst_sum << ", min entry " << worst_neg
           << ", simplex sum drift " << worst_simplex_sum << ", Google vs dense " << worst_google
           << ", row sums " << worst_row;
}

void end_to_end(Verdict& v) {
  const std::string web = std::string(ERGOGAP_DATA_DIR) + "/web1000.tsv";
  const auto t0 = Clock::now();
  std::ostringstream out1, err1, out2, err2;
  const int c1 = cli::run({"bound", "--edges", web, "--google", "0.85", "--teleport", "uniform"}, out1, err1);
  const int c2 = cli::run({"stationary", "--edges", web, "--google", "0.85", "--teleport", "uniform"}, out2, err2);
  const double secs = seconds_since(t0);
  if (c1 != 0 || c2 != 0) {
    v.fail("exit codes " + std::to_string(c1) + "/" + std::to_string(c2) + ": " + err1.str() + err2.str());
    return;
  }
  const auto bound = nlohmann::json::parse(out1.str())["result"];
  const auto stat = nlohmann::json::parse(out2.str())["result"];
  const double best = bound["best_bound"].get<double>();
  const double post = stat["a_posteriori_bound"].get<double>();
  if (best > 0.85) v.fail("best_bound " + std::to_string(best));
  if (!stat["converged"].get<bool>() || post > 1e-10) v.fail("a_posteriori_bound " + std::to_string(post));
  if (secs >= 10.0) v.fail("wall clock " + std::to_string(secs) + " s");
  v.detail << "best_bound " << best << ", a_posteriori_bound " << post << " after "
           << stat["iterations"].get<int>() << " iterations, " << secs << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Verdict&)>>> criteria{
      {"formula equivalence", formula_equivalence},
      {"variational tightness", variational_tightness},
      {"power-sequence soundness", sequence_soundness},
      {"power-sequence convergence", sequence_convergence},
      {"mixture bound", mixture},
      {"exact damping eigenvalue", exact_damping},
      {"closed classes vs fixed space", closed_classes},
      {"certified stationary vector", certified_stationary},
      {"zero-sum and simplex invariance", invariance},
      {"end-to-end CLI", end_to_end},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    failed += v.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.str().c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
