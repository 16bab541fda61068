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

#include "synthaudit/numcore/gradcheck.hpp"

#include <cmath>
#include <string>

#include "synthaudit/error.hpp"

namespace synthaudit::numcore {

GradCheckResult finite_diff_check(const LossFunction& loss,
                                  std::span<const double> params,
                                  std::span<const double> analytic,
                                  double rel_tol, double step) {
  if (params.size() != analytic.size()) {
    throw DimensionError("finite_diff_check: params and gradient differ in length");
  }
  std::vector<double> probe(params.begin(), params.end());
  GradCheckResult result;
  for (std::size_t i = 0; i < probe.size(); ++i) {
    const double original = probe[i];
    probe[i] = original + step;
    const double up = loss(probe);
    probe[i] = original - step;
    const double down = loss(probe);
    probe[i] = original;
    if (!std::isfinite(up) || !std::isfinite(down)) {
      throw NumericError("non-finite loss when perturbing parameter " +
                         std::to_string(i));
    }
    const double numeric = (up - down) / (2.0 * step);
    const double rel = std::abs(analytic[i] - numeric) / (std::abs(numeric) + 1e-8);
    if (rel > result.max_relative_error || i == 0) {
      result.max_relative_error = rel;
      result.worst_index = i;
    }
  }
  result.passed = result.max_relative_error <= rel_tol;
  return result;
}

}  // namespace synthaudit::numcore
