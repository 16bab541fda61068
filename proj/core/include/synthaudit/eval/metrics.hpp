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

#ifndef SYNTHAUDIT_EVAL_METRICS_HPP_
#define SYNTHAUDIT_EVAL_METRICS_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace synthaudit::eval {

// Membership labels, 1 = member. Every metric below requires finite scores,
// 0/1 labels of matching length and both classes present; a single-class
// label vector raises DegenerateLabelsError.
using Labels = std::span<const std::uint8_t>;

// Mann-Whitney AUC with ties counted one half.
double auc(std::span<const double> scores, Labels labels);

// Accuracy of "member iff score > median(scores)".
double accuracy_at_median(std::span<const double> scores, Labels labels);

struct PrecisionCurve {
  std::vector<double> q;
  std::vector<double> precision;
};

// For each q, the mean label of the ceil(q * n) highest-scoring rows. Ties
// keep input order.
PrecisionCurve precision_quantile_curve(std::span<const double> scores, Labels labels,
                                        std::span<const double> q_grid);

// 0.05, 0.10, ..., 1.00.
std::vector<double> default_q_grid();

// Number of rows in the top-q set, ceil(q * n) guarded against rounding.
std::size_t top_count(double q, std::size_t n);

}  // namespace synthaudit::eval

#endif  // SYNTHAUDIT_EVAL_METRICS_HPP_
