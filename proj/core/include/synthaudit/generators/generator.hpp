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

#ifndef SYNTHAUDIT_GENERATORS_GENERATOR_HPP_
#define SYNTHAUDIT_GENERATORS_GENERATOR_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "synthaudit/data/dataset.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace synthaudit::generators {

enum class GeneratorKind {
  kAdditiveNoise,
  kSmoothedBootstrap,
  kGaussianMle,
  kClosedFormScenario,
};

std::string_view to_string(GeneratorKind kind);
// Accepts additive_noise, smoothed_bootstrap, gaussian_mle,
// closed_form_scenario. Throws ConfigError otherwise.
GeneratorKind parse_generator_kind(std::string_view name);

// A toy synthetic-data generator. `knob` is the noise stddev for
// additive_noise, the kernel bandwidth for smoothed_bootstrap, and unused
// otherwise. Smaller knobs memorize more of the training rows.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kAdditiveNoise;
  double knob = 0.0;
  std::size_t n_syn = 1000;
};

void validate(const GeneratorSpec& spec);

// Produces spec.n_syn rows with d_mem's schema:
//   additive_noise / smoothed_bootstrap: a row of d_mem drawn with
//     replacement plus N(0, knob^2 I) noise;
//   gaussian_mle: draws from the maximum-likelihood Gaussian of d_mem;
//   closed_form_scenario: draws from the bimodal 1-d overfitting scenario.
// d_mem is expected to be standardized.
data::Dataset generate(const GeneratorSpec& spec, const data::Dataset& d_mem,
                       numcore::SeededRng& rng);

}  // namespace synthaudit::generators

#endif  // SYNTHAUDIT_GENERATORS_GENERATOR_HPP_
