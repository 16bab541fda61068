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

#ifndef SYNTHAUDIT_ATTACKS_NEIGHBOURS_HPP_
#define SYNTHAUDIT_ATTACKS_NEIGHBOURS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "synthaudit/attacks/scores.hpp"
#include "synthaudit/data/dataset.hpp"
#include "synthaudit/generators/generator.hpp"
#include "synthaudit/numcore/matrix.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace synthaudit::attacks {

// Euclidean distance from each query row to its nearest point.
std::vector<double> nearest_distances(const numcore::RealMatrix& points,
                                      const numcore::RealMatrix& queries);

// Median over rows of the distance to the nearest *distinct* other row;
// 1.0 when all rows coincide.
double default_mc_epsilon(const numcore::RealMatrix& syn);

// Projects both sets onto the leading principal axes of `fit_on`.
struct PcaProjection {
  numcore::RealMatrix fit_on;
  numcore::RealMatrix other;
};
PcaProjection pca_project(const numcore::RealMatrix& fit_on, const numcore::RealMatrix& other,
                          std::size_t components);

struct McConfig {
  std::optional<double> epsilon;   // defaults to default_mc_epsilon
  std::size_t pca_components = 0;  // 0 disables the projection
};

// Fraction of synthetic rows strictly within epsilon of each test row.
AttackScores mc_score(const data::Dataset& d_syn, const data::Dataset& d_test,
                      const McConfig& config = {});

// Negated distance to the nearest of k synthetic rows (all rows when k is
// empty or equals |d_syn|, otherwise a random k-subsample).
AttackScores ganleaks0(const data::Dataset& d_syn, const data::Dataset& d_test,
                       std::optional<std::size_t> k, numcore::SeededRng& rng);

// Calibrated variant against precomputed reference-generator output:
// score = min-dist to reference output - min-dist to synthetic subsample.
AttackScores ganleaks_cal_from(const data::Dataset& d_syn, const data::Dataset& reference_syn,
                               const data::Dataset& d_test, std::optional<std::size_t> k,
                               numcore::SeededRng& rng);

// Trains `reference_generator` on d_ref to produce k reference rows, then
// scores as ganleaks_cal_from.
AttackScores ganleaks_cal(const data::Dataset& d_syn, const data::Dataset& d_ref,
                          const data::Dataset& d_test, std::optional<std::size_t> k,
                          const generators::GeneratorSpec& reference_generator,
                          numcore::SeededRng& rng);

}  // namespace synthaudit::attacks

#endif  // SYNTHAUDIT_ATTACKS_NEIGHBOURS_HPP_
