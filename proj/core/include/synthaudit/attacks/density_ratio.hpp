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

#ifndef SYNTHAUDIT_ATTACKS_DENSITY_RATIO_HPP_
#define SYNTHAUDIT_ATTACKS_DENSITY_RATIO_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "synthaudit/attacks/scores.hpp"
#include "synthaudit/data/dataset.hpp"

namespace synthaudit::attacks {

// score_i = log_pG_i - log_pR_i.
AttackScores domias(std::span<const double> log_pg, std::span<const double> log_pr);

// score_i = log_pG_i.
AttackScores eq1_only(std::span<const double> log_pg);

struct FeaturePrior {
  std::string column;
  double mean = 0.0;
  double stddev = 1.0;
};

// Features not listed carry an improper uniform prior.
struct PriorSpec {
  std::vector<FeaturePrior> features;
};

// score_i = log_pG_i - sum_j log N(x_ij; mean_j, stddev_j) over prior features.
AttackScores gaussian_prior_domias(std::span<const double> log_pg,
                                   const data::Dataset& d_test, const PriorSpec& prior);

}  // namespace synthaudit::attacks

#endif  // SYNTHAUDIT_ATTACKS_DENSITY_RATIO_HPP_
