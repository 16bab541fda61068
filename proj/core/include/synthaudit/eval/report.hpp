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

#ifndef SYNTHAUDIT_EVAL_REPORT_HPP_
#define SYNTHAUDIT_EVAL_REPORT_HPP_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "synthaudit/attacks/scores.hpp"
#include "synthaudit/data/predicate.hpp"
#include "synthaudit/eval/metrics.hpp"
#include "synthaudit/eval/subgroup.hpp"

namespace synthaudit::eval {

struct AttackerResult {
  std::string attacker;
  double auc = 0.0;
  double accuracy_at_median = 0.0;
  PrecisionCurve precision;
  std::vector<SubgroupReport> subgroups;
  nlohmann::json metadata = nlohmann::json::object();
};

AttackerResult evaluate_attacker(const attacks::AttackScores& scores, Labels labels,
                                 std::span<const double> q_grid,
                                 std::span<const data::SubgroupMask> masks = {});

// JSON layout:
//   { "format": "synthaudit.report", "version": 1,
//     "attackers": { <name>: { "auc", "accuracy_at_median",
//                              "precision_curve": {"q": [...], "precision": [...]},
//                              "subgroups": [...], "metadata": {...} } },
//     "utility": { "wasserstein_to_holdout": x | null },
//     "metadata": {...} }
struct AuditReport {
  std::vector<AttackerResult> attackers;
  std::optional<double> wasserstein_to_holdout;
  nlohmann::json metadata = nlohmann::json::object();

  nlohmann::json to_json() const;
  // Checks every metric is finite; throws NumericError otherwise.
  void validate() const;
};

// Long-format CSV "attacker,q,precision" for plotting.
void write_precision_csv(std::ostream& out, const AuditReport& report);

}  // namespace synthaudit::eval

#endif  // SYNTHAUDIT_EVAL_REPORT_HPP_
