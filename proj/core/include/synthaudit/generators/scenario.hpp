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

#ifndef SYNTHAUDIT_GENERATORS_SCENARIO_HPP_
#define SYNTHAUDIT_GENERATORS_SCENARIO_HPP_

#include <cstddef>

#include "synthaudit/data/dataset.hpp"
#include "synthaudit/density/closed_form.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace synthaudit::generators {

// Population of the 1-d overfitting scenario: N(0, 1).
density::ClosedFormDensity bimodal_population_density();
// Generator output of the same scenario: 0.5 N(0, 1) + 0.5 N(4, 0.2^2);
// the bump at 4 is where the generator overfits.
density::ClosedFormDensity bimodal_generator_density();

struct BimodalScenario {
  data::Dataset d_mem;  // from the population density
  data::Dataset d_syn;  // from the generator density
  density::ClosedFormDensity p_r;
  density::ClosedFormDensity p_g;
};

BimodalScenario bimodal_scenario(std::size_t n_mem, std::size_t n_syn,
                              numcore::SeededRng& rng);

// Three equally weighted unit-variance Gaussians with means on a circle of
// radius 2.5 in the (x0, x1) plane. Columns x0..x{dim-1}.
density::ClosedFormDensity gauss_mixture_density(std::size_t dim);
data::Dataset gauss_mixture_population(std::size_t n, std::size_t dim,
                                       numcore::SeededRng& rng);

// Majority N(0, I) with weight 1 - minority_fraction and a minority
// cluster N((5, 5, 0, ...), I). x0 > 2.5 separates the two.
density::ClosedFormDensity minority_mixture_density(std::size_t dim,
                                                    double minority_fraction);
data::Dataset minority_mixture_population(std::size_t n, std::size_t dim,
                                          double minority_fraction,
                                          numcore::SeededRng& rng);

inline constexpr double kMinorityThreshold = 2.5;

}  // namespace synthaudit::generators

#endif  // SYNTHAUDIT_GENERATORS_SCENARIO_HPP_
