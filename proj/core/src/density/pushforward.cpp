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

#include "synthaudit/density/pushforward.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "synthaudit/error.hpp"

namespace synthaudit::density {

double FeatureTransform::forward(double x) const {
  switch (kind) {
    case Kind::kIdentity:
      return x;
    case Kind::kLogShift:
      if (!(x + a > 0.0)) throw ParameterError("log-shift transform outside its domain");
      return std::log(x + a);
    case Kind::kExp:
      return std::exp(x);
    case Kind::kAffine:
      return a + b * x;
  }
  return x;
}

double FeatureTransform::inverse(double y) const {
  switch (kind) {
    case Kind::kIdentity:
      return y;
    case Kind::kLogShift:
      return std::exp(y) - a;
    case Kind::kExp:
      return std::log(y);
    case Kind::kAffine:
      return (y - a) / b;
  }
  return y;
}

double FeatureTransform::log_abs_inverse_derivative(double y) const {
  switch (kind) {
    case Kind::kIdentity:
      return 0.0;
    case Kind::kLogShift:
      return y;
    case Kind::kExp:
      return -std::log(y);
    case Kind::kAffine:
      return -std::log(std::abs(b));
  }
  return 0.0;
}

numcore::RealMatrix transform_rows(const numcore::RealMatrix& x,
                                   const std::vector<FeatureTransform>& transforms) {
  if (transforms.size() != x.cols()) {
    throw DimensionError("one transform per column required");
  }
  std::vector<double> out(x.values().begin(), x.values().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = transforms[i % x.cols()].forward(out[i]);
  }
  return numcore::RealMatrix(x.rows(), x.cols(), std::move(out));
}

PushforwardDensity::PushforwardDensity(std::shared_ptr<const DensityModel> base,
                                       std::vector<FeatureTransform> transforms)
    : base_(std::move(base)), transforms_(std::move(transforms)) {
  if (!base_) throw ParameterError("pushforward needs a base density");
  if (transforms_.size() != base_->dim()) {
    throw DimensionError("pushforward needs one transform per dimension");
  }
  for (const auto& t : transforms_) {
    if (t.kind == FeatureTransform::Kind::kAffine && t.b == 0.0) {
      throw ParameterError("affine transform with zero slope is not invertible");
    }
  }
}

double PushforwardDensity::log_density(std::span<const double> y) const {
  if (y.size() != dim()) {
    throw DimensionError("expected " + std::to_string(dim()) + "-d point");
  }
  std::vector<double> x(y.size());
  double log_jac = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    x[j] = transforms_[j].inverse(y[j]);
    log_jac += transforms_[j].log_abs_inverse_derivative(y[j]);
  }
  return base_->log_density(x) + log_jac;
}

}  // namespace synthaudit::density
