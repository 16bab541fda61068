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

#ifndef SYNTHAUDIT_NUMCORE_GRADCHECK_HPP_
#define SYNTHAUDIT_NUMCORE_GRADCHECK_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace synthaudit::numcore {

// Gradient contract shared by every trainable model: a scalar loss on a
// mini-batch together with its exact derivative w.r.t. the flat parameter
// vector, computed by a hand-written reverse pass.
struct LossAndGradient {
  double loss = 0.0;
  std::vector<double> gradient;
};

using LossFunction = std::function<double(std::span<const double>)>;

struct GradCheckResult {
  bool passed = false;
  double max_relative_error = 0.0;
  std::size_t worst_index = 0;
};

// Compares `analytic` against central differences with step `step`.
// Relative error per coordinate: |analytic - numeric| / (|numeric| + 1e-8).
// Throws NumericError when the loss is non-finite at a perturbed point.
GradCheckResult finite_diff_check(const LossFunction& loss,
                                  std::span<const double> params,
                                  std::span<const double> analytic,
                                  double rel_tol, double step = 1e-5);

}  // namespace synthaudit::numcore

#endif  // SYNTHAUDIT_NUMCORE_GRADCHECK_HPP_
