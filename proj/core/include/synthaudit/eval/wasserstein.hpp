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

#ifndef SYNTHAUDIT_EVAL_WASSERSTEIN_HPP_
#define SYNTHAUDIT_EVAL_WASSERSTEIN_HPP_

#include <span>

#include "synthaudit/data/dataset.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace synthaudit::eval {

// W1 between two equal-size 1-d samples: mean |a_(i) - b_(i)| over sorted order.
double wasserstein_1d(std::span<const double> a, std::span<const double> b);

// Mean over features of wasserstein_1d. The larger set is first resampled
// without replacement down to the size of the smaller one, using rng.
double wasserstein_utility(const data::Dataset& d_syn, const data::Dataset& d_holdout,
                           numcore::SeededRng& rng);

}  // namespace synthaudit::eval

#endif  // SYNTHAUDIT_EVAL_WASSERSTEIN_HPP_
