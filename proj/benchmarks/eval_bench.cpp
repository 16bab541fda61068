// Copyright 2026 The synth-audit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "synthaudit/eval/metrics.hpp"
#include "synthaudit/eval/wasserstein.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace {

using namespace synthaudit;

void BM_Auc(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  numcore::SeededRng rng(1);
  std::vector<double> scores(n);
  std::vector<std::uint8_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    scores[i] = rng.normal();
    labels[i] = i % 2;
  }
  for (auto _ : state) benchmark::DoNotOptimize(eval::auc(scores, labels));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Auc)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oNLogN);

void BM_PrecisionCurve(benchmark::State& state) {
  const std::size_t n = 10000;
  numcore::SeededRng rng(2);
  std::vector<double> scores(n);
  std::vector<std::uint8_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    scores[i] = rng.normal();
    labels[i] = i % 2;
  }
  const auto grid = eval::default_q_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval::precision_quantile_curve(scores, labels, grid));
  }
}
BENCHMARK(BM_PrecisionCurve);

void BM_WassersteinUtility(benchmark::State& state) {
  numcore::SeededRng rng(3);
  std::vector<double> a(2000 * 8), b(2000 * 8);
  for (auto& x : a) x = rng.normal();
  for (auto& x : b) x = rng.normal();
  const data::Dataset da(data::Schema::continuous(8), numcore::RealMatrix(2000, 8, a));
  const data::Dataset db(data::Schema::continuous(8), numcore::RealMatrix(2000, 8, b));
  for (auto _ : state) benchmark::DoNotOptimize(eval::wasserstein_utility(da, db, rng));
}
BENCHMARK(BM_WassersteinUtility);

}  // namespace
