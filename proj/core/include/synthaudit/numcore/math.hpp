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

#ifndef SYNTHAUDIT_NUMCORE_MATH_HPP_
#define SYNTHAUDIT_NUMCORE_MATH_HPP_

#include <span>

namespace synthaudit::numcore {

inline constexpr double kLogSqrt2Pi = 0.91893853320467274178;

double normal_log_pdf(double x, double mean, double stddev);

// log(sum(exp(values))) with max-shift; -inf for an empty input.
double log_sum_exp(std::span<const double> values);

double median(std::span<const double> values);

}  // namespace synthaudit::numcore

#endif  // SYNTHAUDIT_NUMCORE_MATH_HPP_
