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

#include "synthaudit/eval/subgroup.hpp"

#include <vector>

#include "synthaudit/error.hpp"
#include "synthaudit/numcore/math.hpp"

namespace synthaudit::eval {

GroupMetrics group_metrics(std::span<const double> scores, Labels labels,
                           std::span<const std::uint8_t> include, const std::string& group) {
  if (include.size() != scores.size() || labels.size() != scores.size()) {
    throw DimensionError("group mask, scores and labels must have equal length");
  }
  if (scores.empty()) throw DegenerateLabelsError(group + " group is empty");
  const double tau = numcore::median(scores);
  std::vector<double> s;
  std::vector<std::uint8_t> y;
  GroupMetrics m;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!include[i]) continue;
    s.push_back(scores[i]);
    y.push_back(labels[i]);
    m.correct += static_cast<std::uint8_t>(scores[i] > tau) == labels[i];
  }
  m.rows = s.size();
  std::size_t members = 0;
  for (auto v : y) members += v;
  if (members == 0 || members == y.size()) {
    throw DegenerateLabelsError(group + " group (" + std::to_string(m.rows) +
                                " rows) does not contain both members and non-members");
  }
  m.auc = auc(s, y);
  m.accuracy = static_cast<double>(m.correct) / static_cast<double>(m.rows);
  return m;
}

nlohmann::json SubgroupReport::to_json() const {
  auto side = [](const GroupMetrics& g) {
    return nlohmann::json{{"rows", g.rows}, {"auc", g.auc}, {"accuracy", g.accuracy}};
  };
  return {{"description", description},
          {"minority", side(minority)},
          {"majority", side(majority)},
          {"auc_gap", auc_gap},
          {"accuracy_gap", accuracy_gap}};
}

SubgroupReport subgroup_report(std::span<const double> scores, Labels labels,
                               const data::SubgroupMask& mask) {
  std::vector<std::uint8_t> inverse(mask.bits.size());
  for (std::size_t i = 0; i < inverse.size(); ++i) inverse[i] = mask.bits[i] ? 0 : 1;
  SubgroupReport r;
  r.description = mask.description;
  r.minority = group_metrics(scores, labels, mask.bits, "minority");
  r.majority = group_metrics(scores, labels, inverse, "majority");
  r.auc_gap = r.minority.auc - r.majority.auc;
  r.accuracy_gap = r.minority.accuracy - r.majority.accuracy;
  return r;
}

}  // namespace synthaudit::eval
