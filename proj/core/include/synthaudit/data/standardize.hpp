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

#ifndef SYNTHAUDIT_DATA_STANDARDIZE_HPP_
#define SYNTHAUDIT_DATA_STANDARDIZE_HPP_

#include <span>
#include <vector>

#include "synthaudit/data/dataset.hpp"

namespace synthaudit::data {

// Column means and population standard deviations (divide by n).
// Binary columns are treated like continuous ones. Throws
// DegenerateColumnError naming the first zero-variance column.
StandardizationParams fit_standardization(const Dataset& fit_on);

Dataset apply_standardization(const Dataset& data,
                              const StandardizationParams& params);

Dataset destandardize(const Dataset& data);

struct StandardizeResult {
  StandardizationParams params;
  std::vector<Dataset> outputs;
};

StandardizeResult standardize_fit_apply(const Dataset& fit_on,
                                        std::span<const Dataset> apply_to);

}  // namespace synthaudit::data

#endif  // SYNTHAUDIT_DATA_STANDARDIZE_HPP_
