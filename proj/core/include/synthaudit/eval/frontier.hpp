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

#ifndef SYNTHAUDIT_EVAL_FRONTIER_HPP_
#define SYNTHAUDIT_EVAL_FRONTIER_HPP_

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "synthaudit/attacks/scores.hpp"
#include "synthaudit/data/dataset.hpp"
#include "synthaudit/eval/metrics.hpp"
#include "synthaudit/generators/generator.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace synthaudit::eval {

struct FrontierPoint {
  double knob = 0.0;
  double utility = 0.0;  // Wasserstein distance to the holdout, lower is better
  std::vector<std::pair<std::string, double>> auc;
};

// Produces D_syn for a generator spec.
using SynthesizeFn =
    std::function<data::Dataset(const generators::GeneratorSpec&, numcore::SeededRng&)>;
// Scores the test rows given D_syn.
using AttackFn = std::function<std::vector<attacks::AttackScores>(const data::Dataset& d_syn,
                                                                  numcore::SeededRng&)>;

struct FrontierSetup {
  generators::GeneratorSpec base;
  SynthesizeFn synthesize;
  AttackFn attack;
  std::vector<std::uint8_t> labels;
  data::Dataset holdout;  // compared against D_syn for utility
};

// One point per knob. Point i draws all randomness from rng.child(i), so the
// result does not depend on evaluation order.
std::vector<FrontierPoint> frontier_sweep(const FrontierSetup& setup,
                                          std::span<const double> knobs,
                                          const numcore::SeededRng& rng);

// The additive-noise grid used for privacy-utility sweeps.
std::vector<double> standard_noise_grid();

}  // namespace synthaudit::eval

#endif  // SYNTHAUDIT_EVAL_FRONTIER_HPP_
