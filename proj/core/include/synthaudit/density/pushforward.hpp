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

#ifndef SYNTHAUDIT_DENSITY_PUSHFORWARD_HPP_
#define SYNTHAUDIT_DENSITY_PUSHFORWARD_HPP_

#include <memory>
#include <vector>

#include "synthaudit/density/density_model.hpp"

namespace synthaudit::density {

// Strictly monotone per-feature reparametrization y = g(x).
struct FeatureTransform {
  enum class Kind { kIdentity, kLogShift, kExp, kAffine };

  Kind kind = Kind::kIdentity;
  double a = 0.0;  // shift for kLogShift, offset for kAffine
  double b = 1.0;  // slope for kAffine (non-zero)

  static FeatureTransform identity() { return {}; }
  // y = ln(x + shift); defined for x > -shift.
  static FeatureTransform log_shift(double shift) { return {Kind::kLogShift, shift, 1.0}; }
  static FeatureTransform exp() { return {Kind::kExp, 0.0, 1.0}; }
  static FeatureTransform affine(double offset, double slope) {
    return {Kind::kAffine, offset, slope};
  }

  double forward(double x) const;
  double inverse(double y) const;
  // log |d g^{-1} / dy| at y.
  double log_abs_inverse_derivative(double y) const;
};

numcore::RealMatrix transform_rows(const numcore::RealMatrix& x,
                                   const std::vector<FeatureTransform>& transforms);

// Density of g(X) for X ~ base, by the change-of-variables rule:
// log p~(y) = log p(g^{-1}(y)) + sum_j log |d g_j^{-1} / dy_j|.
class PushforwardDensity final : public DensityModel {
 public:
  PushforwardDensity(std::shared_ptr<const DensityModel> base,
                     std::vector<FeatureTransform> transforms);

  std::size_t dim() const override { return base_->dim(); }
  double log_density(std::span<const double> y) const override;

 private:
  std::shared_ptr<const DensityModel> base_;
  std::vector<FeatureTransform> transforms_;
};

}  // namespace synthaudit::density

#endif  // SYNTHAUDIT_DENSITY_PUSHFORWARD_HPP_
