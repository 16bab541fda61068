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

#ifndef SYNTHAUDIT_DENSITY_DENSITY_MODEL_HPP_
#define SYNTHAUDIT_DENSITY_DENSITY_MODEL_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "synthaudit/numcore/matrix.hpp"

namespace synthaudit::density {

// A fitted estimator with an exact, deterministic per-point log-density.
// Implementations are immutable after fitting and safe to query
// concurrently.
class DensityModel {
 public:
  virtual ~DensityModel() = default;

  virtual std::size_t dim() const = 0;
  // Throws DimensionError if x.size() != dim().
  virtual double log_density(std::span<const double> x) const = 0;
  virtual std::vector<double> log_density_rows(const numcore::RealMatrix& x) const;
};

}  // namespace synthaudit::density

#endif  // SYNTHAUDIT_DENSITY_DENSITY_MODEL_HPP_
