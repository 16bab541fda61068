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

#ifndef SYNTHAUDIT_EVAL_SUBGROUP_HPP_
#define SYNTHAUDIT_EVAL_SUBGROUP_HPP_

#include <cstddef>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "synthaudit/data/predicate.hpp"
#include "synthaudit/eval/metrics.hpp"

namespace synthaudit::eval {

struct GroupMetrics {
  std::size_t rows = 0;
  std::size_t correct = 0;  // rows where the median-threshold guess is right
  double auc = 0.0;
  double accuracy = 0.0;
};

// Metrics on the rows where include[i] == 1. Accuracy uses the median of
// *all* scores as threshold, so per-group correct counts add up to the
// global count. `group` names the group in DegenerateLabelsError.
GroupMetrics group_metrics(std::span<const double> scores, Labels labels,
                           std::span<const std::uint8_t> include, const std::string& group);

struct SubgroupReport {
  std::string description;
  GroupMetrics minority;  // mask bit 1
  GroupMetrics majority;  // mask bit 0
  double auc_gap = 0.0;   // minority - majority
  double accuracy_gap = 0.0;

  nlohmann::json to_json() const;
};

SubgroupReport subgroup_report(std::span<const double> scores, Labels labels,
                               const data::SubgroupMask& mask);

}  // namespace synthaudit::eval

#endif  // SYNTHAUDIT_EVAL_SUBGROUP_HPP_
