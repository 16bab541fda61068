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

#include "synthaudit/data/standardize.hpp"

#include <cmath>

#include "synthaudit/error.hpp"

namespace synthaudit::data {

StandardizationParams fit_standardization(const Dataset& fit_on) {
  if (fit_on.empty()) throw SizeError("cannot fit standardization on an empty dataset");
  if (fit_on.standardized()) {
    throw ParameterError("fit_standardization: dataset is already standardized");
  }
  const std::size_t n = fit_on.rows();
  const std::size_t d = fit_on.cols();
  StandardizationParams params{std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
  for (std::size_t c = 0; c < d; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) sum += fit_on.values()(r, c);
    const double mean = sum / static_cast<double>(n);
    double sq = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double diff = fit_on.values()(r, c) - mean;
      sq += diff * diff;
    }
    const double sd = std::sqrt(sq / static_cast<double>(n));
    if (!(sd > 0.0)) {
      throw DegenerateColumnError("column '" + fit_on.schema()[c].name +
                                  "' has zero variance");
    }
    params.mean[c] = mean;
    params.scale[c] = sd;
  }
  return params;
}

Dataset apply_standardization(const Dataset& data,
                              const StandardizationParams& params) {
  if (data.standardized()) {
    throw ParameterError("apply_standardization: dataset is already standardized");
  }
  const std::size_t d = data.cols();
  if (params.mean.size() != d || params.scale.size() != d) {
    throw DimensionError("standardization params do not match column count");
  }
  std::vector<double> values(data.values().values().begin(),
                             data.values().values().end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t c = i % d;
    values[i] = (values[i] - params.mean[c]) / params.scale[c];
  }
  return Dataset(data.schema(), numcore::RealMatrix(data.rows(), d, std::move(values)),
                 params);
}

Dataset destandardize(const Dataset& data) {
  if (!data.standardized()) return data;
  const auto& params = *data.standardization();
  const std::size_t d = data.cols();
  std::vector<double> values(data.values().values().begin(),
                             data.values().values().end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t c = i % d;
    values[i] = values[i] * params.scale[c] + params.mean[c];
  }
  return Dataset(data.schema(), numcore::RealMatrix(data.rows(), d, std::move(values)));
}

StandardizeResult standardize_fit_apply(const Dataset& fit_on,
                                        std::span<const Dataset> apply_to) {
  StandardizeResult result{fit_standardization(fit_on), {}};
  result.outputs.reserve(apply_to.size());
  for (const auto& ds : apply_to) {
    result.outputs.push_back(apply_standardization(ds, result.params));
  }
  return result;
}

}  // namespace synthaudit::data
