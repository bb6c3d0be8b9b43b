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

#include <benchmark/benchmark.h>

#include <fstream>

#include "ergogap/dobrushin.hpp"
#include "ergogap/io.hpp"
#include "ergogap/oracle.hpp"
#include "ergogap/spectral_bound.hpp"
#include "ergogap/stationary.hpp"
#include "support/generators.hpp"

namespace {

using namespace ergogap;

const StochasticMatrix& web_graph() {
  static const StochasticMatrix p = [] {
    std::ifstream in(std::string(ERGOGAP_DATA_DIR) + "/web1000.tsv");
    return ingest_edge_list(in).matrix;
  }();
  return p;
}

DenseMatrix random_dense(std::size_t n) {
  testing::Rng rng(n);
  return testing::random_dense_stochastic(rng, n, 0.5);
}

void BM_CoefficientWebGraph(benchmark::State& state) {
  const auto& p = web_graph();
  for (auto _ : state) benchmark::DoNotOptimize(dobrushin_coefficient(p).q);
}
BENCHMARK(BM_CoefficientWebGraph)->Unit(benchmark::kMillisecond);

void BM_CoefficientDense(benchmark::State& state) {
  const auto m = random_dense(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dobrushin_coefficient(m).q);
}
BENCHMARK(BM_CoefficientDense)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_GoogleApplyTranspose(benchmark::State& state) {
  const auto g = build_google(web_graph(), 0.85, SimplexVector::uniform(web_graph().size()));
  const auto x = SimplexVector::uniform(g.size());
  for (auto _ : state) benchmark::DoNotOptimize(apply_transpose(g, x.values()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(web_graph().nnz()));
}
BENCHMARK(BM_GoogleApplyTranspose);

void BM_StationaryWebGraph(benchmark::State& state) {
  const auto g = build_google(web_graph(), 0.85, SimplexVector::uniform(web_graph().size()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stationary_distribution(g, SimplexVector::uniform(g.size())).kappa);
  }
}
BENCHMARK(BM_StationaryWebGraph)->Unit(benchmark::kMillisecond);

void BM_ClosedSubsetsWebGraph(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(closed_subsets(web_graph()).count);
}
BENCHMARK(BM_ClosedSubsetsWebGraph)->Unit(benchmark::kMicrosecond);

void BM_CertificateSequence(benchmark::State& state) {
  const auto m = random_dense(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certificate_sequence(m, 32).best_bound);
}
BENCHMARK(BM_CertificateSequence)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_EigenvaluesDense(benchmark::State& state) {
  const auto m = random_dense(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_dense(m).size());
}
BENCHMARK(BM_EigenvaluesDense)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
