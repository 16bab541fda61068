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

#include "synthaudit/density/kde.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "synthaudit/error.hpp"
#include "synthaudit/numcore/math.hpp"

namespace synthaudit::density {

double scott_bandwidth(std::size_t n, std::size_t d) {
  if (n == 0) throw SizeError("scott_bandwidth needs at least one sample");
  if (d == 0) throw DimensionError("scott_bandwidth needs d >= 1");
  return std::pow(static_cast<double>(n), -1.0 / (static_cast<double>(d) + 4.0));
}

KdeModel::KdeModel(numcore::RealMatrix points, double bandwidth)
    : points_(std::move(points)), bandwidth_(bandwidth) {
  if (points_.empty()) throw SizeError("KDE needs at least one point");
  if (!(bandwidth_ > 0.0) || !std::isfinite(bandwidth_)) {
    throw ParameterError("KDE bandwidth must be positive, got " + std::to_string(bandwidth_));
  }
  const double d = static_cast<double>(points_.cols());
  log_norm_ = -std::log(static_cast<double>(points_.rows())) -
              d * (numcore::kLogSqrt2Pi + std::log(bandwidth_));
}

double KdeModel::log_density(std::span<const double> x) const {
  if (x.size() != dim()) {
    throw DimensionError("expected " + std::to_string(dim()) + "-d point, got " +
                         std::to_string(x.size()));
  }
  const double inv_two_h2 = 1.0 / (2.0 * bandwidth_ * bandwidth_);
  std::vector<double> exponents(points_.rows());
  for (std::size_t i = 0; i < points_.rows(); ++i) {
    exponents[i] = -numcore::squared_distance(x, points_.row(i)) * inv_two_h2;
  }
  return numcore::log_sum_exp(exponents) + log_norm_;
}

nlohmann::json KdeModel::to_json() const {
  return {{"format", "synthaudit.kde"},
          {"version", 1},
          {"bandwidth", bandwidth_},
          {"rows", points_.rows()},
          {"cols", points_.cols()},
          {"points", std::vector<double>(points_.values().begin(), points_.values().end())}};
}

KdeModel KdeModel::from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "synthaudit.kde" || j.value("version", 0) != 1) {
    throw ParseError("not a version-1 KDE model dump");
  }
  return KdeModel(numcore::RealMatrix(j.at("rows").get<std::size_t>(),
                                      j.at("cols").get<std::size_t>(),
                                      j.at("points").get<std::vector<double>>()),
                  j.at("bandwidth").get<double>());
}

KdeModel kde_fit(const numcore::RealMatrix& points, std::optional<double> bandwidth) {
  if (points.empty()) throw SizeError("cannot fit a KDE on an empty dataset");
  const double h = bandwidth ? *bandwidth : scott_bandwidth(points.rows(), points.cols());
  return KdeModel(points, h);
}

KdeModel kde_fit(const data::Dataset& data, std::optional<double> bandwidth) {
  return kde_fit(data.values(), bandwidth);
}

}  // namespace synthaudit::density
