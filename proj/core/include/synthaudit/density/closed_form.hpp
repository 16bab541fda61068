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

#ifndef SYNTHAUDIT_DENSITY_CLOSED_FORM_HPP_
#define SYNTHAUDIT_DENSITY_CLOSED_FORM_HPP_

#include <vector>

#include "synthaudit/density/density_model.hpp"
#include "synthaudit/numcore/rng.hpp"

namespace synthaudit::density {

struct GaussianComponent {
  double weight = 1.0;
  std::vector<double> mean;
  std::vector<double> stddev;
};

// Mixture of axis-aligned Gaussians with an analytic log-density.
class ClosedFormDensity final : public DensityModel {
 public:
  // Throws ParameterError unless weights are >= 0 and sum to 1 (within
  // 1e-9) and every stddev is positive; DimensionError on ragged means.
  explicit ClosedFormDensity(std::vector<GaussianComponent> components);

  static ClosedFormDensity standard_normal(std::size_t dim);

  std::size_t dim() const override { return dim_; }
  double log_density(std::span<const double> x) const override;

  const std::vector<GaussianComponent>& components() const noexcept {
    return components_;
  }

  numcore::RealMatrix sample(std::size_t n, numcore::SeededRng& rng) const;

 private:
  std::vector<GaussianComponent> components_;
  std::vector<double> log_weights_;
  std::size_t dim_ = 0;
};

}  // namespace synthaudit::density

#endif  // SYNTHAUDIT_DENSITY_CLOSED_FORM_HPP_
