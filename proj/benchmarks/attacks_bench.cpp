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

#include "synthaudit/attacks/neighbours.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace {

using namespace synthaudit;

data::Dataset normal_dataset(std::size_t n, std::size_t d, std::uint64_t seed) {
  numcore::SeededRng rng(seed);
  std::vector<double> v(n * d);
  for (auto& x : v) x = rng.normal();
  return data::Dataset(data::Schema::continuous(d), numcore::RealMatrix(n, d, std::move(v)));
}

void BM_GanLeaks0(benchmark::State& state) {
  const auto syn = normal_dataset(static_cast<std::size_t>(state.range(0)), 4, 1);
  const auto test = normal_dataset(200, 4, 2);
  numcore::SeededRng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(attacks::ganleaks0(syn, test, std::nullopt, rng));
}
BENCHMARK(BM_GanLeaks0)->Arg(1000)->Arg(10000);

void BM_McScoreDefaultEpsilon(benchmark::State& state) {
  const auto syn = normal_dataset(static_cast<std::size_t>(state.range(0)), 4, 4);
  const auto test = normal_dataset(200, 4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(attacks::mc_score(syn, test));
}
BENCHMARK(BM_McScoreDefaultEpsilon)->Arg(1000)->Arg(4000);

}  // namespace
