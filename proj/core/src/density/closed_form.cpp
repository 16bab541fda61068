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

#include "synthaudit/density/closed_form.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "synthaudit/error.hpp"
#include "synthaudit/numcore/math.hpp"

namespace synthaudit::density {

std::vector<double> DensityModel::log_density_rows(const numcore::RealMatrix& x) const {
  std::vector<double> out(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) out[r] = log_density(x.row(r));
  return out;
}

ClosedFormDensity::ClosedFormDensity(std::vector<GaussianComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw ParameterError("mixture needs at least one component");
  dim_ = components_.front().mean.size();
  if (dim_ == 0) throw DimensionError("mixture component has zero dimensions");
  double total = 0.0;
  for (const auto& c : components_) {
    if (c.mean.size() != dim_ || c.stddev.size() != dim_) {
      throw DimensionError("mixture components disagree on dimension");
    }
    if (!(c.weight >= 0.0)) throw ParameterError("mixture weight must be non-negative");
    for (double s : c.stddev) {
      if (!(s > 0.0)) throw ParameterError("mixture stddev must be positive");
    }
    total += c.weight;
    log_weights_.push_back(c.weight > 0.0 ? std::log(c.weight)
                                          : -std::numeric_limits<double>::infinity());
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ParameterError("mixture weights sum to " + std::to_string(total));
  }
}

ClosedFormDensity ClosedFormDensity::standard_normal(std::size_t dim) {
  return ClosedFormDensity(
      {GaussianComponent{1.0, std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0)}});
}

double ClosedFormDensity::log_density(std::span<const double> x) const {
  if (x.size() != dim_) {
    throw DimensionError("expected " + std::to_string(dim_) + "-d point, got " +
                         std::to_string(x.size()));
  }
  if (components_.size() == 1) {
    double lp = 0.0;
    const auto& c = components_.front();
    for (std::size_t j = 0; j < dim_; ++j) {
      lp += numcore::normal_log_pdf(x[j], c.mean[j], c.stddev[j]);
    }
    return lp;
  }
  std::vector<double> terms;
  terms.reserve(components_.size());
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const auto& c = components_[k];
    double lp = log_weights_[k];
    for (std::size_t j = 0; j < dim_; ++j) {
      lp += numcore::normal_log_pdf(x[j], c.mean[j], c.stddev[j]);
    }
    terms.push_back(lp);
  }
  return numcore::log_sum_exp(terms);
}

numcore::RealMatrix ClosedFormDensity::sample(std::size_t n,
                                              numcore::SeededRng& rng) const {
  std::vector<double> values;
  values.reserve(n * dim_);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    std::size_t k = 0;
    double cumulative = components_[0].weight;
    while (u >= cumulative && k + 1 < components_.size()) {
      ++k;
      cumulative += components_[k].weight;
    }
    const auto& c = components_[k];
    for (std::size_t j = 0; j < dim_; ++j) values.push_back(rng.normal(c.mean[j], c.stddev[j]));
  }
  return numcore::RealMatrix(n, dim_, std::move(values));
}

}  // namespace synthaudit::density
