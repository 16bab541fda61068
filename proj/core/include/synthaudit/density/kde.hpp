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

#ifndef SYNTHAUDIT_DENSITY_KDE_HPP_
#define SYNTHAUDIT_DENSITY_KDE_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "synthaudit/data/dataset.hpp"
#include "synthaudit/density/density_model.hpp"

namespace synthaudit::density {

// Scott's rule for standardized data: n^(-1/(d+4)).
double scott_bandwidth(std::size_t n, std::size_t d);

// Isotropic Gaussian kernel density estimate.
class KdeModel final : public DensityModel {
 public:
  // Throws SizeError on empty points, ParameterError unless bandwidth > 0.
  KdeModel(numcore::RealMatrix points, double bandwidth);

  std::size_t dim() const override { return points_.cols(); }
  double bandwidth() const noexcept { return bandwidth_; }
  const numcore::RealMatrix& points() const noexcept { return points_; }

  // log((1/n) sum_i N(x; point_i, h^2 I)), log-sum-exp stabilized.
  double log_density(std::span<const double> x) const override;

  nlohmann::json to_json() const;
  static KdeModel from_json(const nlohmann::json& j);

 private:
  numcore::RealMatrix points_;
  double bandwidth_;
  double log_norm_;
};

// Bandwidth defaults to scott_bandwidth(rows, cols). Expects standardized
// data; the kernel is isotropic.
KdeModel kde_fit(const data::Dataset& data, std::optional<double> bandwidth = std::nullopt);
KdeModel kde_fit(const numcore::RealMatrix& points,
                 std::optional<double> bandwidth = std::nullopt);

}  // namespace synthaudit::density

#endif  // SYNTHAUDIT_DENSITY_KDE_HPP_
