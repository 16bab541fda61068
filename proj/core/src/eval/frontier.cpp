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

#include "synthaudit/eval/frontier.hpp"

#include "synthaudit/error.hpp"
#include "synthaudit/eval/wasserstein.hpp"

namespace synthaudit::eval {

std::vector<FrontierPoint> frontier_sweep(const FrontierSetup& setup,
                                          std::span<const double> knobs,
                                          const numcore::SeededRng& rng) {
  if (knobs.empty()) throw ParameterError("frontier sweep needs at least one knob value");
  if (!setup.synthesize || !setup.attack) {
    throw ParameterError("frontier sweep needs a synthesizer and an attack set");
  }
  std::vector<FrontierPoint> points;
  for (std::size_t i = 0; i < knobs.size(); ++i) {
    auto point_rng = rng.child(i);
    auto spec = setup.base;
    spec.knob = knobs[i];
    const auto d_syn = setup.synthesize(spec, point_rng);
    const auto all_scores = setup.attack(d_syn, point_rng);
    if (all_scores.empty()) throw ParameterError("frontier sweep needs at least one attacker");
    FrontierPoint p;
    p.knob = knobs[i];
    p.utility = wasserstein_utility(d_syn, setup.holdout, point_rng);
    for (const auto& s : all_scores) p.auc.emplace_back(s.attacker, auc(s.scores, setup.labels));
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<double> standard_noise_grid() {
  return {0.7, 0.9, 1.1, 1.3, 1.5, 1.7, 1.9, 2.3, 2.5, 2.9, 3.5, 3.9};
}

}  // namespace synthaudit::eval
