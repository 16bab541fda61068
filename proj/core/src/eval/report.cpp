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

#include "synthaudit/eval/report.hpp"

#include <cmath>
#include <ostream>

#include "synthaudit/data/csv.hpp"
#include "synthaudit/error.hpp"

namespace synthaudit::eval {

AttackerResult evaluate_attacker(const attacks::AttackScores& scores, Labels labels,
                                 std::span<const double> q_grid,
                                 std::span<const data::SubgroupMask> masks) {
  AttackerResult r;
  r.attacker = scores.attacker;
  r.auc = auc(scores.scores, labels);
  r.accuracy_at_median = accuracy_at_median(scores.scores, labels);
  r.precision = precision_quantile_curve(scores.scores, labels, q_grid);
  for (const auto& mask : masks) r.subgroups.push_back(subgroup_report(scores.scores, labels, mask));
  r.metadata = scores.metadata;
  return r;
}

nlohmann::json AuditReport::to_json() const {
  nlohmann::json attackers_json = nlohmann::json::object();
  for (const auto& a : attackers) {
    nlohmann::json subgroups = nlohmann::json::array();
    for (const auto& s : a.subgroups) subgroups.push_back(s.to_json());
    attackers_json[a.attacker] = {
        {"auc", a.auc},
        {"accuracy_at_median", a.accuracy_at_median},
        {"precision_curve", {{"q", a.precision.q}, {"precision", a.precision.precision}}},
        {"subgroups", subgroups},
        {"metadata", a.metadata}};
  }
  nlohmann::json utility = {{"wasserstein_to_holdout", nullptr}};
  if (wasserstein_to_holdout) utility["wasserstein_to_holdout"] = *wasserstein_to_holdout;
  return {{"format", "synthaudit.report"},
          {"version", 1},
          {"attackers", attackers_json},
          {"utility", utility},
          {"metadata", metadata}};
}

void AuditReport::validate() const {
  auto check = [](double v, const std::string& what) {
    if (!std::isfinite(v)) throw NumericError("report metric '" + what + "' is not finite");
  };
  for (const auto& a : attackers) {
    check(a.auc, a.attacker + ".auc");
    check(a.accuracy_at_median, a.attacker + ".accuracy_at_median");
    for (double p : a.precision.precision) check(p, a.attacker + ".precision");
    for (const auto& s : a.subgroups) {
      check(s.auc_gap, a.attacker + ".subgroup.auc_gap");
      check(s.accuracy_gap, a.attacker + ".subgroup.accuracy_gap");
    }
  }
  if (wasserstein_to_holdout) check(*wasserstein_to_holdout, "wasserstein_to_holdout");
}

void write_precision_csv(std::ostream& out, const AuditReport& report) {
  out << "attacker,q,precision\n";
  for (const auto& a : report.attackers) {
    for (std::size_t i = 0; i < a.precision.q.size(); ++i) {
      out << a.attacker << ',' << data::format_double(a.precision.q[i]) << ','
          << data::format_double(a.precision.precision[i]) << '\n';
    }
  }
}

}  // namespace synthaudit::eval
